#include "knfam/lie_core.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knfam {

FiniteLieAlgebra FiniteLieAlgebra::zero(int dim) {
  FiniteLieAlgebra L;
  L.dim = dim;
  L.structure.assign(
      static_cast<std::size_t>(dim),
      std::vector<std::vector<Rational>>(
          static_cast<std::size_t>(dim),
          std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))));
  return L;
}

void FiniteLieAlgebra::set(int a, int b, int k, const Rational &v) {
  structure[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
           [static_cast<std::size_t>(k)] = v;
}

std::string FiniteLieAlgebra::basis_name(int a) const {
  if (a >= 0 && a < static_cast<int>(basis_names.size()))
    return basis_names[static_cast<std::size_t>(a)];
  return "T" + std::to_string(a + 1);
}

FiniteLieAlgebra make_validated(FiniteLieAlgebra L) {
  Report rep = verify_lie_axioms(L);
  if (!rep.pass)
    throw InvalidStructureConstants("structure constants fail the Lie "
                                    "axioms: " + rep.witness);
  return L;
}

std::vector<Rational> bracket_fd(const FiniteLieAlgebra &L,
                                 const std::vector<Rational> &x,
                                 const std::vector<Rational> &y) {
  if (static_cast<int>(x.size()) != L.dim ||
      static_cast<int>(y.size()) != L.dim)
    throw DimensionMismatch("bracket_fd: vectors must have length " +
                            std::to_string(L.dim));
  std::vector<Rational> r(static_cast<std::size_t>(L.dim), Rational(0));
  for (int a = 0; a < L.dim; ++a) {
    if (x[static_cast<std::size_t>(a)] == 0)
      continue;
    for (int b = 0; b < L.dim; ++b) {
      if (y[static_cast<std::size_t>(b)] == 0)
        continue;
      Rational xy = x[static_cast<std::size_t>(a)] *
                    y[static_cast<std::size_t>(b)];
      for (int k = 0; k < L.dim; ++k) {
        const Rational &c = L.c(a, b, k);
        if (c != 0)
          r[static_cast<std::size_t>(k)] += xy * c;
      }
    }
  }
  return r;
}

Report verify_lie_axioms(const FiniteLieAlgebra &L) {
  Report rep;
  rep.detail = "Lie axioms for a " + std::to_string(L.dim) +
               "-dimensional structure-constant table";
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b)
      for (int k = 0; k < L.dim; ++k) {
        ++rep.checked;
        if (L.c(a, b, k) != -L.c(b, a, k)) {
          rep.fail("antisymmetry fails at C[" + std::to_string(a + 1) + "][" +
                   std::to_string(b + 1) + "]^" + std::to_string(k + 1));
          return rep;
        }
      }
  /* sum_k ( C_ab^k C_kc^l + C_bc^k C_ka^l + C_ca^k C_kb^l ) = 0 */
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b)
      for (int c = 0; c < L.dim; ++c)
        for (int l = 0; l < L.dim; ++l) {
          Rational s = 0;
          for (int k = 0; k < L.dim; ++k)
            s += L.c(a, b, k) * L.c(k, c, l) + L.c(b, c, k) * L.c(k, a, l) +
                 L.c(c, a, k) * L.c(k, b, l);
          ++rep.checked;
          if (s != 0) {
            rep.fail("Jacobi sum fails at basis triple (" +
                     std::to_string(a + 1) + "," + std::to_string(b + 1) +
                     "," + std::to_string(c + 1) + "), component " +
                     std::to_string(l + 1));
            return rep;
          }
        }
  return rep;
}

BilinearForm killing_form(const FiniteLieAlgebra &L) {
  BilinearForm B;
  B.matrix.assign(
      static_cast<std::size_t>(L.dim),
      std::vector<Rational>(static_cast<std::size_t>(L.dim), Rational(0)));
  /* kappa(T_a, T_b) = tr(ad T_a . ad T_b) = sum_{c,d} C_ad^c C_bc^d */
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b) {
      Rational s = 0;
      for (int c = 0; c < L.dim; ++c)
        for (int d = 0; d < L.dim; ++d)
          s += L.c(a, d, c) * L.c(b, c, d);
      B.matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
    }
  return B;
}

Report verify_invariance(const FiniteLieAlgebra &L, const BilinearForm &B) {
  Report rep;
  rep.detail = "symmetry and invariance of a bilinear form";
  if (static_cast<int>(B.matrix.size()) != L.dim)
    throw DimensionMismatch("verify_invariance: form has wrong dimension");
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b) {
      ++rep.checked;
      if (B.at(a, b) != B.at(b, a)) {
        rep.fail("symmetry fails at (" + std::to_string(a + 1) + "," +
                 std::to_string(b + 1) + ")");
        return rep;
      }
    }
  /* beta([a,b],c) = beta(a,[b,c]) on basis triples */
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b)
      for (int c = 0; c < L.dim; ++c) {
        Rational lhs = 0, rhs = 0;
        for (int k = 0; k < L.dim; ++k) {
          lhs += L.c(a, b, k) * B.at(k, c);
          rhs += L.c(b, c, k) * B.at(a, k);
        }
        ++rep.checked;
        if (lhs != rhs) {
          rep.fail("invariance fails at basis triple (" +
                   std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                   std::to_string(c + 1) + ")");
          return rep;
        }
      }
  return rep;
}

FiniteLieAlgebra sl2_standard() {
  FiniteLieAlgebra L = FiniteLieAlgebra::zero(3);
  L.basis_names = {"h", "e", "f"};
  const int h = 0, e = 1, f = 2;
  L.set(h, e, e, 2);
  L.set(e, h, e, -2);
  L.set(h, f, f, -2);
  L.set(f, h, f, 2);
  L.set(e, f, h, 1);
  L.set(f, e, h, -1);
  return L;
}

static Rational rational_from_json(const nlohmann::json &v) {
  if (v.is_number_integer())
    return Rational(v.get<long long>());
  if (v.is_string())
    return rational_from_string(v.get<std::string>());
  throw ParseError("structure-constant values must be integers or rational "
                   "strings");
}

FiniteLieAlgebra lie_from_json(const std::string &json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("expected an object with an integer 'dim'");
  int dim = j["dim"].get<int>();
  if (dim <= 0)
    throw ParseError("'dim' must be positive");
  FiniteLieAlgebra L = FiniteLieAlgebra::zero(dim);
  if (j.contains("basis") && j["basis"].is_array())
    for (const auto &name : j["basis"])
      L.basis_names.push_back(name.get<std::string>());
  if (j.contains("entries")) {
    if (!j["entries"].is_array())
      throw ParseError("'entries' must be an array");
    for (const auto &ent : j["entries"]) {
      int a = ent.at("a").get<int>(), b = ent.at("b").get<int>(),
          c = ent.at("c").get<int>();
      if (a < 1 || a > dim || b < 1 || b > dim || c < 1 || c > dim)
        throw ParseError("entry index out of range 1.." + std::to_string(dim));
      L.set(a - 1, b - 1, c - 1, rational_from_json(ent.at("value")));
    }
  }
  return make_validated(std::move(L));
}

FiniteLieAlgebra lie_from_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return lie_from_json(buf.str());
}

} // namespace knfam
