#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>

namespace gderham {

// Exact scalars. All algebraic invariants in this library are decided over
// the rationals; floating point enters only in the Hodge-theory layer.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError on
/// malformed input or a zero denominator.
Rat rat_from_string(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

Eigen::MatrixXd to_double(const RatMat& m);
Eigen::VectorXd to_double(const RatVec& v);

}  // namespace gderham
