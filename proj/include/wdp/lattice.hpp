#pragma once
// Lattice core: the three Picard lattice models and exact divisor-class
// arithmetic over them. Everything downstream (root systems, line sets,
// minimality tests, descent data) is built on the pairing defined here.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdp {

using Coeff = std::int64_t;

// Error codes cover the failure surface of the whole library; the CLI maps
// them onto its exit-code contract.
enum class Errc {
  parse_error,
  invalid_argument,
  invalid_configuration,
  not_in_line_set,
  not_a_fiber_class,
  unsupported_degree,
  invalid_action,
  group_cap_exceeded,
  catalog_miss,
  not_applicable,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

std::string errc_name(Errc code);

enum class Shape {
  BlowupOfP2,    // degree 1..7, rank 10-degree, basis e0,e1,...,e_{9-degree}
  QuadricP1xP1,  // degree 8, rank 2, basis f1,f2 (the two rulings)
  Hirzebruch2,   // degree 8, rank 2, basis s,f (section with s*s=-2, fiber)
};

std::string shape_name(Shape shape);
Shape shape_from_name(const std::string& name);

// A divisor class as an integer coefficient vector over the model basis.
// Equality is componentwise; ordering is lexicographic on coefficients.
struct DivisorClass {
  std::vector<Coeff> c;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Coeff> coeffs) : c(std::move(coeffs)) {}

  std::size_t rank() const { return c.size(); }
  bool is_zero() const;

  bool operator==(const DivisorClass&) const = default;
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    return a.c < b.c;
  }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(Coeff k);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    a += b;
    return a;
  }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    a -= b;
    return a;
  }
  friend DivisorClass operator*(Coeff k, DivisorClass a) {
    a *= k;
    return a;
  }

  std::string to_string() const;  // "[3,-1,0,...]"
};

// A fixed basis presentation of the Picard lattice of one of the three
// surface models. Immutable after construction.
class LatticeModel {
public:
  LatticeModel(int degree, Shape shape);

  static LatticeModel blowup(int degree);  // degree 1..7
  static LatticeModel quadric();           // degree 8
  static LatticeModel hirzebruch2();       // degree 8

  int degree() const noexcept { return degree_; }
  Shape shape() const noexcept { return shape_; }
  int rank() const noexcept { return rank_; }
  // Number of blown-up points for BlowupOfP2 (9-degree), 0 otherwise.
  int points() const noexcept;

  Coeff pair(const DivisorClass& a, const DivisorClass& b) const;
  Coeff self(const DivisorClass& a) const { return pair(a, a); }

  DivisorClass zero() const;
  DivisorClass basis(int i) const;
  DivisorClass canonical_class() const;

  std::vector<std::vector<Coeff>> gram() const;

  bool operator==(const LatticeModel&) const = default;

private:
  int degree_;
  Shape shape_;
  int rank_;
};

// Guards user-supplied coefficient vectors: wrong rank or coefficients large
// enough to threaten 64-bit pairing arithmetic are rejected up front.
void check_class_vector(const LatticeModel& model, const DivisorClass& d);

}  // namespace wdp
