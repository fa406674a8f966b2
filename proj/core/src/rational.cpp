#include "gderham/rational.hpp"

#include <cctype>
#include <sstream>

#include "gderham/errors.hpp"

namespace gderham {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_integer_literal(text)) throw ParseError("not a rational: '" + text + "'");
      return Rat(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw ParseError("not a rational: '" + text + "'");
    }
    const BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    // Division canonicalizes; the two-string mpq constructor would not.
    return Rat(BigInt(num)) / Rat(d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

std::string rat_to_string(const Rat& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

double rat_to_double(const Rat& value) { return value.convert_to<double>(); }

Eigen::MatrixXd to_double(const RatMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = rat_to_double(m(i, j));
  return out;
}

Eigen::VectorXd to_double(const RatVec& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = rat_to_double(v(i));
  return out;
}

}  // namespace gderham
