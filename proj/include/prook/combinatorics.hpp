#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prook {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run over more objects than its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Default cap on the number of diagrams an exhaustive verifier may visit.
inline constexpr std::size_t kDefaultDiagramCap = 1'000'000;

BigInt binomial(long n, long k);

/// n! / (parts[0]! ... parts[r]!), where n is the sum of the parts.
BigInt multinomial(std::span<const int> parts);

/// Compositions of n into exactly `parts` non-negative integers.
///
/// Ordered colexicographically: tuples are compared from their last
/// component backwards, so for n = 1 and three parts the order is
/// (1,0,0), (0,1,0), (0,0,1).
std::vector<std::vector<int>> compositions(int n, int parts);

bool colex_less(std::span<const int> lhs, std::span<const int> rhs);

std::string join_bar(std::span<const int> values);

}  // namespace prook
