#include "wdp/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace wdp {

namespace {

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') i = 1;
  if (i == s.size()) return false;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) return false;
  }
  out = static_cast<int>(s[0] == '-' ? -v : v);
  return true;
}

// Comma-separated index list, possibly empty.
std::vector<int> parse_index_list(const std::string& s, const std::string& literal) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    int v;
    if (!parse_int(item, v))
      throw Error(Errc::parse_error, "bad index in class literal: " + literal);
    out.push_back(v);
  }
  if (!s.empty() && s.back() == ',')
    throw Error(Errc::parse_error, "trailing comma in class literal: " + literal);
  return out;
}

void require_distinct_in_range(const std::vector<int>& idx, int n,
                               const std::string& literal) {
  std::set<int> seen;
  for (int i : idx) {
    if (i < 1 || i > n)
      throw Error(Errc::parse_error,
                  "index out of range 1.." + std::to_string(n) + " in: " + literal);
    if (!seen.insert(i).second)
      throw Error(Errc::parse_error, "repeated index in: " + literal);
  }
}

DivisorClass parse_rank2(const LatticeModel& model, const std::string& s) {
  if (model.shape() == Shape::QuadricP1xP1) {
    if (s == "f1") return model.basis(0);
    if (s == "f2") return model.basis(1);
  } else {
    if (s == "s") return model.basis(0);
    if (s == "f") return model.basis(1);
  }
  throw Error(Errc::invalid_argument,
              "class literal " + s + " does not exist on " + shape_name(model.shape()));
}

DivisorClass parse_blowup(const LatticeModel& model, const std::string& s) {
  const int n = model.points();
  if (s[0] == 'e') {
    int i;
    if (!parse_int(s.substr(1), i) || i < 0)
      throw Error(Errc::parse_error, "bad class literal: " + s);
    if (i > n)
      throw Error(Errc::invalid_argument,
                  "basis class " + s + " does not exist in degree " +
                      std::to_string(model.degree()));
    return model.basis(i);
  }

  auto colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::string tail = colon == std::string::npos ? std::string() : s.substr(colon + 1);

  if (head == "L") {
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "bad class literal: " + s);
    auto idx = parse_index_list(tail, s);
    if (idx.size() != 2 || idx[0] == idx[1])
      throw Error(Errc::parse_error, "L requires two distinct indices: " + s);
    require_distinct_in_range(idx, n, s);
    DivisorClass d = model.basis(0);
    d -= model.basis(idx[0]);
    d -= model.basis(idx[1]);
    return d;
  }
  if (head == "M0") {
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "bad class literal: " + s);
    auto idx = parse_index_list(tail, s);
    if (idx.size() != 2)
      throw Error(Errc::parse_error, "M0 requires two indices: " + s);
    require_distinct_in_range(idx, n, s);
    if (idx[0] >= idx[1])
      throw Error(Errc::parse_error, "M0 requires increasing indices: " + s);
    DivisorClass d = model.basis(idx[0]);
    d -= model.basis(idx[1]);
    return d;
  }
  if (head == "M1") {
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "bad class literal: " + s);
    auto idx = parse_index_list(tail, s);
    if (idx.size() != 3)
      throw Error(Errc::parse_error, "M1 requires three indices: " + s);
    require_distinct_in_range(idx, n, s);
    if (n < 3)
      throw Error(Errc::invalid_argument,
                  "M1 classes do not exist in degree " + std::to_string(model.degree()));
    DivisorClass d = model.basis(0);
    for (int i : idx) d -= model.basis(i);
    return d;
  }
  if (head == "M2") {
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "bad class literal: " + s);
    if (n < 6)
      throw Error(Errc::invalid_argument,
                  "M2 classes do not exist in degree " + std::to_string(model.degree()));
    auto idx = parse_index_list(tail, s);
    require_distinct_in_range(idx, n, s);
    if (static_cast<int>(idx.size()) != n - 6)
      throw Error(Errc::parse_error,
                  "M2 requires " + std::to_string(n - 6) + " indices in degree " +
                      std::to_string(model.degree()) + ": " + s);
    DivisorClass d = 2 * model.basis(0);
    for (int i = 1; i <= n; ++i) d -= model.basis(i);
    for (int i : idx) d += model.basis(i);
    return d;
  }
  if (head == "M3") {
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "bad class literal: " + s);
    if (n < 8)
      throw Error(Errc::invalid_argument,
                  "M3 classes do not exist in degree " + std::to_string(model.degree()));
    auto idx = parse_index_list(tail, s);
    if (idx.size() != 1)
      throw Error(Errc::parse_error, "M3 requires one index: " + s);
    require_distinct_in_range(idx, n, s);
    DivisorClass d = 3 * model.basis(0);
    for (int i = 1; i <= n; ++i) d -= model.basis(i);
    d -= model.basis(idx[0]);
    return d;
  }
  throw Error(Errc::parse_error, "bad class literal: " + s);
}

}  // namespace

DivisorClass parse_class_symbol(const LatticeModel& model, const std::string& s) {
  if (s.empty()) throw Error(Errc::parse_error, "empty class literal");
  if (model.shape() == Shape::BlowupOfP2) return parse_blowup(model, s);
  return parse_rank2(model, s);
}

DivisorClass parse_class_literal(const LatticeModel& model, const std::string& s) {
  if (s.empty() || s.front() != '[') return parse_class_symbol(model, s);
  if (s.back() != ']') throw Error(Errc::parse_error, "bad class literal: " + s);
  std::vector<Coeff> c;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.erase(item.begin());
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.pop_back();
    int v;
    if (!parse_int(item, v))
      throw Error(Errc::parse_error, "bad coefficient in class literal: " + s);
    c.push_back(v);
  }
  if (static_cast<int>(c.size()) != model.rank())
    throw Error(Errc::invalid_argument,
                "class literal " + s + " has " + std::to_string(c.size()) +
                    " coefficients, expected " + std::to_string(model.rank()));
  return DivisorClass(std::move(c));
}

std::string class_symbol(const LatticeModel& model, const DivisorClass& d) {
  if (static_cast<int>(d.rank()) != model.rank()) return "";
  if (model.shape() == Shape::QuadricP1xP1) {
    if (d == model.basis(0)) return "f1";
    if (d == model.basis(1)) return "f2";
    return "";
  }
  if (model.shape() == Shape::Hirzebruch2) {
    if (d == model.basis(0)) return "s";
    if (d == model.basis(1)) return "f";
    return "";
  }

  const int n = model.points();
  const Coeff a = d.c[0];
  std::vector<int> minus1, minus2, plus1, zero, other;
  for (int i = 1; i <= n; ++i) {
    switch (d.c[i]) {
      case -1: minus1.push_back(i); break;
      case -2: minus2.push_back(i); break;
      case 1: plus1.push_back(i); break;
      case 0: zero.push_back(i); break;
      default: other.push_back(i); break;
    }
  }
  if (!other.empty()) return "";
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };

  if (a == 0) {
    if (plus1.empty() && minus1.empty() && minus2.empty()) return "";
    if (plus1.size() == 1 && minus1.empty() && minus2.empty())
      return "e" + std::to_string(plus1[0]);
    if (plus1.size() == 1 && minus1.size() == 1 && minus2.empty() &&
        plus1[0] < minus1[0])
      return "M0:" + join({plus1[0], minus1[0]});
    return "";
  }
  if (a == 1 && d.c == model.basis(0).c) return "e0";
  if (a == 1 && plus1.empty() && minus2.empty()) {
    if (minus1.size() == 2) return "L:" + join(minus1);
    if (minus1.size() == 3) return "M1:" + join(minus1);
    return "";
  }
  if (a == 2 && plus1.empty() && minus2.empty() && minus1.size() == 6 &&
      n >= 6 && static_cast<int>(zero.size()) == n - 6)
    return "M2:" + join(zero);
  if (a == 3 && plus1.empty() && minus2.size() == 1 &&
      static_cast<int>(minus1.size()) == n - 1 && n == 8)
    return "M3:" + std::to_string(minus2[0]);
  return "";
}

}  // namespace wdp
