#include "wdp/lattice.hpp"

#include <cstdlib>
#include <sstream>

namespace wdp {

namespace {

// Pairing arithmetic stays well inside int64 as long as individual
// coefficients are bounded; user-facing vectors are checked at the boundary.
constexpr Coeff kMaxCoeff = 1000000;

}  // namespace

std::string errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::invalid_configuration: return "invalid_configuration";
    case Errc::not_in_line_set: return "not_in_line_set";
    case Errc::not_a_fiber_class: return "not_a_fiber_class";
    case Errc::unsupported_degree: return "unsupported_degree";
    case Errc::invalid_action: return "invalid_action";
    case Errc::group_cap_exceeded: return "group_cap_exceeded";
    case Errc::catalog_miss: return "catalog_miss";
    case Errc::not_applicable: return "not_applicable";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

std::string shape_name(Shape shape) {
  switch (shape) {
    case Shape::BlowupOfP2: return "BlowupOfP2";
    case Shape::QuadricP1xP1: return "QuadricP1xP1";
    case Shape::Hirzebruch2: return "Hirzebruch2";
  }
  return "unknown";
}

Shape shape_from_name(const std::string& name) {
  if (name == "BlowupOfP2") return Shape::BlowupOfP2;
  if (name == "QuadricP1xP1") return Shape::QuadricP1xP1;
  if (name == "Hirzebruch2") return Shape::Hirzebruch2;
  throw Error(Errc::parse_error, "unknown shape: " + name);
}

bool DivisorClass::is_zero() const {
  for (Coeff x : c)
    if (x != 0) return false;
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (c.size() != o.c.size())
    throw Error(Errc::invalid_argument, "rank mismatch in class addition");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (c.size() != o.c.size())
    throw Error(Errc::invalid_argument, "rank mismatch in class subtraction");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(Coeff k) {
  for (Coeff& x : c) x *= k;
  return *this;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  out << ']';
  return out.str();
}

LatticeModel::LatticeModel(int degree, Shape shape)
    : degree_(degree), shape_(shape) {
  switch (shape) {
    case Shape::BlowupOfP2:
      if (degree < 1 || degree > 7)
        throw Error(Errc::unsupported_degree,
                    "BlowupOfP2 requires degree 1..7, got " + std::to_string(degree));
      rank_ = 10 - degree;
      break;
    case Shape::QuadricP1xP1:
    case Shape::Hirzebruch2:
      if (degree != 8)
        throw Error(Errc::unsupported_degree,
                    shape_name(shape) + " requires degree 8, got " + std::to_string(degree));
      rank_ = 2;
      break;
    default:
      throw Error(Errc::invalid_argument, "unknown shape");
  }
}

LatticeModel LatticeModel::blowup(int degree) {
  return LatticeModel(degree, Shape::BlowupOfP2);
}

LatticeModel LatticeModel::quadric() {
  return LatticeModel(8, Shape::QuadricP1xP1);
}

LatticeModel LatticeModel::hirzebruch2() {
  return LatticeModel(8, Shape::Hirzebruch2);
}

int LatticeModel::points() const noexcept {
  return shape_ == Shape::BlowupOfP2 ? 9 - degree_ : 0;
}

Coeff LatticeModel::pair(const DivisorClass& a, const DivisorClass& b) const {
  if (static_cast<int>(a.rank()) != rank_ || static_cast<int>(b.rank()) != rank_)
    throw Error(Errc::invalid_argument, "rank mismatch in pairing");
  switch (shape_) {
    case Shape::BlowupOfP2: {
      Coeff s = a.c[0] * b.c[0];
      for (int i = 1; i < rank_; ++i) s -= a.c[i] * b.c[i];
      return s;
    }
    case Shape::QuadricP1xP1:
      return a.c[0] * b.c[1] + a.c[1] * b.c[0];
    case Shape::Hirzebruch2:
      return -2 * a.c[0] * b.c[0] + a.c[0] * b.c[1] + a.c[1] * b.c[0];
  }
  std::abort();
}

DivisorClass LatticeModel::zero() const {
  return DivisorClass(std::vector<Coeff>(rank_, 0));
}

DivisorClass LatticeModel::basis(int i) const {
  if (i < 0 || i >= rank_)
    throw Error(Errc::invalid_argument, "basis index out of range");
  DivisorClass d = zero();
  d.c[i] = 1;
  return d;
}

DivisorClass LatticeModel::canonical_class() const {
  DivisorClass k = zero();
  switch (shape_) {
    case Shape::BlowupOfP2:
      k.c[0] = -3;
      for (int i = 1; i < rank_; ++i) k.c[i] = 1;
      break;
    case Shape::QuadricP1xP1:
      k.c[0] = -2;
      k.c[1] = -2;
      break;
    case Shape::Hirzebruch2:
      k.c[0] = -2;
      k.c[1] = -4;
      break;
  }
  return k;
}

std::vector<std::vector<Coeff>> LatticeModel::gram() const {
  std::vector<std::vector<Coeff>> g(rank_, std::vector<Coeff>(rank_, 0));
  switch (shape_) {
    case Shape::BlowupOfP2:
      g[0][0] = 1;
      for (int i = 1; i < rank_; ++i) g[i][i] = -1;
      break;
    case Shape::QuadricP1xP1:
      g[0][1] = g[1][0] = 1;
      break;
    case Shape::Hirzebruch2:
      g[0][0] = -2;
      g[0][1] = g[1][0] = 1;
      break;
  }
  return g;
}

void check_class_vector(const LatticeModel& model, const DivisorClass& d) {
  if (static_cast<int>(d.rank()) != model.rank())
    throw Error(Errc::parse_error,
                "class vector has rank " + std::to_string(d.rank()) +
                    ", model rank is " + std::to_string(model.rank()));
  for (Coeff x : d.c)
    if (x > kMaxCoeff || x < -kMaxCoeff)
      throw Error(Errc::parse_error, "class coefficient out of range: " + std::to_string(x));
}

}  // namespace wdp
