#include "pentagrid/fibcode.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace pentagrid {

namespace {

constexpr std::size_t kTable = 512;

const std::vector<Natural> &table() {
  static const std::vector<Natural> t = [] {
    std::vector<Natural> v(kTable);
    v[0] = 1;
    v[1] = 1;
    for (std::size_t i = 2; i < kTable; ++i)
      v[i] = v[i - 1] + v[i - 2];
    return v;
  }();
  return t;
}

} // namespace

std::string StdRep::str() const { return digits.empty() ? "ε" : digits; }

std::string_view StdRep::tail2() const {
  static constexpr std::array<std::string_view, 2> pad = {"00", "01"};
  if (digits.size() >= 2)
    return std::string_view(digits).substr(digits.size() - 2);
  if (digits.empty())
    return pad[0];
  return digits[0] == '1' ? pad[1] : pad[0];
}

Natural fib(std::size_t i) {
  const auto &t = table();
  if (i < t.size())
    return t[i];
  Natural a = t[kTable - 2], b = t[kTable - 1];
  for (std::size_t k = kTable; k <= i; ++k) {
    Natural c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

StdRep encode(const Natural &n) {
  if (n < 0)
    throw std::invalid_argument("encode: negative number");
  if (n == 0)
    return {};

  // weights fib(1), fib(2), ... up to the largest one not above n
  const auto &t = table();
  std::vector<Natural> extra;
  std::size_t top = 1;
  while (top + 1 < t.size() && t[top + 1] <= n)
    ++top;
  if (top + 1 == t.size()) {
    Natural a = t[top - 1], b = t[top];
    while (a + b <= n) {
      Natural c = a + b;
      a = std::move(b);
      b = c;
      extra.push_back(std::move(c));
    }
  }
  auto weight = [&](std::size_t i) -> const Natural & {
    return i < t.size() ? t[i] : extra[i - t.size()];
  };
  std::size_t width = top + extra.size();

  StdRep r;
  r.digits.reserve(width);
  Natural rest = n;
  for (std::size_t i = width; i >= 1; --i) {
    if (weight(i) <= rest) {
      r.digits.push_back('1');
      rest -= weight(i);
    } else {
      r.digits.push_back('0');
    }
  }
  return r;
}

Natural decode(std::string_view bits) {
  Natural sum = 0;
  const std::size_t len = bits.size();
  for (std::size_t k = 0; k < len; ++k) {
    char c = bits[k];
    if (c == '1')
      sum += fib(len - k);
    else if (c != '0')
      throw std::invalid_argument("decode: digit must be 0 or 1");
  }
  return sum;
}

bool is_standard(std::string_view bits) noexcept {
  if (bits.empty())
    return true;
  if (bits.front() != '1')
    return false;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1')
      return false;
    if (k > 0 && bits[k] == '1' && bits[k - 1] == '1')
      return false;
  }
  return true;
}

StdRep parse_rep(std::string_view text) {
  if (text == "ε")
    return {};
  for (char c : text)
    if (c != '0' && c != '1')
      throw std::invalid_argument("not a binary word: " + std::string(text));
  return StdRep{std::string(text)};
}

bool shortlex_less(const StdRep &a, const StdRep &b) noexcept {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a.digits < b.digits;
}

} // namespace pentagrid
