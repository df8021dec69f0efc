#include "okalab/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "okalab/error.hpp"

namespace okalab {

namespace {

[[noreturn]] void malformed(std::string_view text, const char* why) {
  throw Error(ErrorCode::MalformedScalar,
              "malformed scalar '" + std::string(text) + "': " + why);
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap = !s.empty();
      continue;
    }
    if (gap && (is_digit(c) || c == 'i') && (is_digit(s.back()) || s.back() == 'i'))
      malformed(text, "whitespace inside a number");
    gap = false;
    s.push_back(c);
  }
  if (s.empty()) malformed(text, "empty");

  mpq_class re(0), im(0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      malformed(text, "expected '+' or '-' between terms");
    }
    first = false;

    mpq_class value(1);
    bool has_number = false;
    if (pos < s.size() && is_digit(s[pos])) {
      std::size_t start = pos;
      while (pos < s.size() && is_digit(s[pos])) ++pos;
      std::string num = s.substr(start, pos - start);
      std::string den = "1";
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        start = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == start) malformed(text, "missing denominator");
        den = s.substr(start, pos - start);
      }
      mpz_class n(num), d(den);
      if (d == 0) malformed(text, "zero denominator");
      value = mpq_class(n, d);
      value.canonicalize();
      has_number = true;
    }

    bool imaginary = false;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_number) malformed(text, "dangling '*'");
      ++pos;
      if (pos >= s.size() || s[pos] != 'i') malformed(text, "expected 'i' after '*'");
    }
    if (pos < s.size() && s[pos] == 'i') {
      imaginary = true;
      ++pos;
    }
    if (!has_number && !imaginary) malformed(text, "expected a number or 'i'");

    if (sign < 0) value = -value;
    (imaginary ? im : re) += value;
  }
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  std::string out = re_.get_str();
  if (sgn(im_) != 0) {
    if (sgn(im_) > 0) {
      out += '+';
      out += im_.get_str();
    } else {
      out += '-';
      out += mpq_class(-im_).get_str();
    }
    out += "*i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

VectorQ make_vector(std::initializer_list<GaussianRational> entries) {
  VectorQ v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

MatrixQ make_matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto ncols = nrows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  MatrixQ m(nrows, ncols);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != ncols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    Eigen::Index c = 0;
    for (const auto& e : row) m(r, c++) = e;
    ++r;
  }
  return m;
}

bool lex_less(const VectorQ& a, const VectorQ& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lex_less(a(i), b(i))) return true;
    if (lex_less(b(i), a(i))) return false;
  }
  return a.size() < b.size();
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::MalformedScalar: return "malformed_scalar";
    case ErrorCode::MalformedDocument: return "malformed_document";
    case ErrorCode::ZeroForm: return "zero_form";
    case ErrorCode::DuplicateHyperplane: return "duplicate_hyperplane";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::PointOnArrangement: return "point_on_arrangement";
    case ErrorCode::PointInBaseLocus: return "point_in_base_locus";
    case ErrorCode::CircuitMismatch: return "circuit_mismatch";
    case ErrorCode::RangeError: return "range_error";
    case ErrorCode::PreconditionViolated: return "precondition_violated";
    case ErrorCode::CommonFactor: return "common_factor";
    case ErrorCode::BothZero: return "both_zero";
    case ErrorCode::ZeroSample: return "zero_sample";
    case ErrorCode::UnderResolvedLoop: return "under_resolved_loop";
    case ErrorCode::AllSamplesSkipped: return "all_samples_skipped";
    case ErrorCode::CommonZero: return "common_zero";
    case ErrorCode::FileNotFound: return "file_not_found";
    case ErrorCode::UsageError: return "usage_error";
  }
  return "unknown";
}

}  // namespace okalab
