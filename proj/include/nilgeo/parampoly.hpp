#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilgeo/gauss.hpp"

namespace nilgeo {

/// Polynomial in formal deformation parameters t_k and their formal
/// conjugates s_k (printed `conj(t_k)`), with GaussRational coefficients.
/// Conjugation swaps t_k <-> s_k and conjugates coefficients, so the two
/// are independent ring variables; evaluation binds s_k := conj(value(t_k)).
///
/// Exponent vectors are interleaved [t_0, s_0, t_1, s_1, ...] over the
/// context `names`, so extending the context never reshuffles slots.
class ParamPoly {
 public:
  using Exponents = std::vector<uint32_t>;

  ParamPoly() = default;
  ParamPoly(GaussRational c) {  // NOLINT: implicit constant embedding
    if (!c.is_zero()) terms_[Exponents{}] = std::move(c);
  }
  ParamPoly(long n) : ParamPoly(GaussRational(n)) {}  // NOLINT

  static ParamPoly variable(const std::string& name) { return monomial(name, false); }
  static ParamPoly conj_variable(const std::string& name) { return monomial(name, true); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
  }
  GaussRational as_constant() const {
    if (terms_.empty()) return GaussRational();
    if (!is_constant())
      throw Error("NOT_CONSTANT", "polynomial has unresolved parameters: " + str());
    return terms_.begin()->second;
  }

  const std::vector<std::string>& context() const { return names_; }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;  // -1 for the zero polynomial
  }
  int lowest_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      if (d < 0 || total(e) < d) d = total(e);
    return d;
  }
  ParamPoly homogeneous_part(int d) const {
    ParamPoly out;
    out.names_ = names_;
    for (const auto& [e, c] : terms_)
      if (total(e) == d) out.terms_[e] = c;
    return out;
  }

  ParamPoly conj() const {
    ParamPoly out;
    out.names_ = names_;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (size_t k = 0; k + 1 < f.size(); k += 2) std::swap(f[k], f[k + 1]);
      out.terms_[std::move(f)] = c.conj();
    }
    return out;
  }

  /// Ring-homomorphism evaluation; s_k is bound to conj of t_k's value.
  /// Every parameter occurring in the polynomial must be assigned.
  GaussRational eval(const std::map<std::string, GaussRational>& point) const {
    GaussRational acc;
    for (const auto& [e, c] : terms_) {
      GaussRational term = c;
      for (size_t slot = 0; slot < e.size(); ++slot) {
        if (e[slot] == 0) continue;
        const std::string& name = names_[slot / 2];
        auto it = point.find(name);
        if (it == point.end())
          throw Error("UNBOUND_VARIABLE", "no value for parameter '" + name + "'");
        GaussRational v = (slot % 2 == 0) ? it->second : it->second.conj();
        for (uint32_t k = 0; k < e[slot]; ++k) term *= v;
      }
      acc += term;
    }
    return acc;
  }

  ParamPoly operator-() const {
    ParamPoly out;
    out.names_ = names_;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    align(*this, o, [](ParamPoly& self, const Exponents& e, const GaussRational& c) {
      auto [it, inserted] = self.terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) self.terms_.erase(it);
      }
    });
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) { return *this += -o; }

  ParamPoly& operator*=(const ParamPoly& o) {
    ParamPoly rhs = o;
    merge_contexts(*this, rhs);
    std::map<Exponents, GaussRational> prod;
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
        for (size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
        GaussRational c = ca * cb;
        auto [it, inserted] = prod.try_emplace(std::move(e), c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) prod.erase(it);
        }
      }
    }
    terms_ = std::move(prod);
    return *this;
  }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly x = a, y = b;
    merge_contexts(x, y);
    x.pad();
    y.pad();
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// One product term of the polynomial, for printing.
  struct Term {
    GaussRational coeff;
    std::vector<std::pair<std::string, bool>> factors;  // (name, is_conjugate), repeated per power
  };
  std::vector<Term> product_terms() const {
    std::vector<Term> out;
    for (const auto& [e, c] : terms_) {
      Term t;
      t.coeff = c;
      for (size_t slot = 0; slot < e.size(); ++slot)
        for (uint32_t k = 0; k < e[slot]; ++k)
          t.factors.emplace_back(names_[slot / 2], slot % 2 == 1);
      out.push_back(std::move(t));
    }
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const Term& t : product_terms()) {
      if (!out.empty()) out += " + ";
      std::string c = t.coeff.str();
      if (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos)
        c = "(" + c + ")";
      out += c;
      for (const auto& [name, is_conj] : t.factors)
        out += "*" + (is_conj ? "conj(" + name + ")" : name);
    }
    return out;
  }

 private:
  static ParamPoly monomial(const std::string& name, bool conjugate) {
    ParamPoly p;
    p.names_.push_back(name);
    Exponents e(2, 0);
    e[conjugate ? 1 : 0] = 1;
    p.terms_[std::move(e)] = GaussRational(1);
    return p;
  }

  static int total(const Exponents& e) {
    int d = 0;
    for (uint32_t x : e) d += static_cast<int>(x);
    return d;
  }

  void pad() {
    std::map<Exponents, GaussRational> out;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f.resize(2 * names_.size(), 0);
      out[std::move(f)] = c;
    }
    terms_ = std::move(out);
  }

  // Rebuilds the polynomial over a context that contains names_ as a subset.
  void reindex(const std::vector<std::string>& new_names) {
    std::vector<size_t> where(names_.size());
    for (size_t k = 0; k < names_.size(); ++k) {
      auto it = std::find(new_names.begin(), new_names.end(), names_[k]);
      where[k] = static_cast<size_t>(it - new_names.begin());
    }
    std::map<Exponents, GaussRational> out;
    for (const auto& [e, c] : terms_) {
      Exponents f(2 * new_names.size(), 0);
      for (size_t slot = 0; slot < e.size(); ++slot)
        f[2 * where[slot / 2] + slot % 2] = e[slot];
      out[std::move(f)] = c;
    }
    terms_ = std::move(out);
    names_ = new_names;
  }

  static void merge_contexts(ParamPoly& a, ParamPoly& b) {
    if (a.names_ == b.names_) return;
    std::vector<std::string> merged = a.names_;
    for (const auto& n : b.names_)
      if (std::find(merged.begin(), merged.end(), n) == merged.end()) merged.push_back(n);
    if (merged != a.names_) a.reindex(merged);
    if (merged != b.names_) b.reindex(merged);
  }

  template <typename Fn>
  static void align(ParamPoly& self, const ParamPoly& other, Fn add_term) {
    ParamPoly rhs = other;
    merge_contexts(self, rhs);
    self.pad();
    rhs.pad();
    for (const auto& [e, c] : rhs.terms_) add_term(self, e, c);
  }

  std::vector<std::string> names_;
  std::map<Exponents, GaussRational> terms_;
};

inline ParamPoly conj(const ParamPoly& p) { return p.conj(); }

}  // namespace nilgeo
