#ifndef PENTAGRID_FIBCODE_HPP
#define PENTAGRID_FIBCODE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pentagrid {

using Natural = boost::multiprecision::cpp_int;

// Zeckendorf word, most significant digit first. The rightmost digit
// carries weight fib(1).
struct StdRep {
  std::string digits;

  bool empty() const noexcept { return digits.empty(); }
  std::size_t size() const noexcept { return digits.size(); }

  // "ε" for the empty word.
  std::string str() const;

  // last two digits, left-padded with '0'
  std::string_view tail2() const;

  auto operator<=>(const StdRep &) const = default;
};

// fib(0) = fib(1) = 1
Natural fib(std::size_t i);

StdRep encode(const Natural &n);

// Positional sum; any 0/1 word is accepted. Throws std::invalid_argument
// on other characters.
Natural decode(std::string_view bits);
inline Natural decode(const StdRep &rep) { return decode(rep.digits); }

bool is_standard(std::string_view bits) noexcept;

// Accepts "", "ε" or a 0/1 word; throws std::invalid_argument otherwise.
StdRep parse_rep(std::string_view text);

// Shortlex order on words; matches numeric order on standard words.
bool shortlex_less(const StdRep &a, const StdRep &b) noexcept;

} // namespace pentagrid

#endif
