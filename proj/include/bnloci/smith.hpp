#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bnloci {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Smith normal form of an integer matrix: unimodular left/right factors
/// with left * a * right == diag, where diag is diagonal, nonnegative, and
/// each diagonal entry divides the next.
struct SmithDecomposition {
    BigMatrix left;
    BigMatrix diag;
    BigMatrix right;
};

SmithDecomposition smith_normal_form(const BigMatrix& a);

/// Some integer solution x of a * x = b, or nothing when b is outside the
/// integer column span of a.  Exact; no growth restrictions on entries.
std::optional<std::vector<BigInt>> solve_integer_system(const BigMatrix& a,
                                                        const std::vector<BigInt>& b);

}  // namespace bnloci
