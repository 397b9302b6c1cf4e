#include "knfam/table_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace knfam {

using ordered_json = nlohmann::ordered_json;

std::string products_table(const FamilySpec &spec, int window,
                           TableFormat format) {
  if (format == TableFormat::Csv) {
    std::ostringstream os;
    os << "n,m,j,coeff\n";
    for (int n = -window; n <= window; ++n)
      for (int m = -window; m <= window; ++m) {
        const FnElement prod = basis_product(spec, n, m);
        for (const auto &[j, c] : prod.terms())
          os << n << ',' << m << ',' << j << ',' << poly_to_string(c) << '\n';
      }
    return os.str();
  }
  ordered_json doc;
  doc["table"] = "products";
  doc["spec"] = spec.name();
  doc["window"] = window;
  doc["rows"] = ordered_json::array();
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m) {
      const FnElement prod = basis_product(spec, n, m);
      ordered_json row;
      row["n"] = n;
      row["m"] = m;
      row["coeffs"] = ordered_json::array();
      for (const auto &[j, c] : prod.terms())
        row["coeffs"].push_back({{"degree", j}, {"poly", poly_to_string(c)}});
      doc["rows"].push_back(std::move(row));
    }
  return doc.dump(2) + "\n";
}

std::string brackets_table(const CurrentFamily &F, int window,
                           TableFormat format) {
  const int dim = F.lie.dim;
  if (format == TableFormat::Csv) {
    std::ostringstream os;
    os << "a,n,b,m,c,j,coeff\n";
    for (int a = 0; a < dim; ++a)
      for (int n = -window; n <= window; ++n)
        for (int b = 0; b < dim; ++b)
          for (int m = -window; m <= window; ++m) {
            const CurrentElement br = current_bracket(
                F, CurrentElement::basis(a, n), CurrentElement::basis(b, m));
            for (const auto &[key, coeff] : br.terms())
              os << a + 1 << ',' << n << ',' << b + 1 << ',' << m << ','
                 << key.first + 1 << ',' << key.second << ','
                 << poly_to_string(coeff) << '\n';
          }
    return os.str();
  }
  ordered_json doc;
  doc["table"] = "brackets";
  doc["spec"] = F.spec.name();
  doc["dim"] = dim;
  doc["window"] = window;
  doc["rows"] = ordered_json::array();
  for (int a = 0; a < dim; ++a)
    for (int n = -window; n <= window; ++n)
      for (int b = 0; b < dim; ++b)
        for (int m = -window; m <= window; ++m) {
          const CurrentElement br = current_bracket(
              F, CurrentElement::basis(a, n), CurrentElement::basis(b, m));
          if (br.is_zero()) continue;
          ordered_json row;
          row["a"] = a + 1;
          row["n"] = n;
          row["b"] = b + 1;
          row["m"] = m;
          row["coeffs"] = ordered_json::array();
          for (const auto &[key, coeff] : br.terms())
            row["coeffs"].push_back({{"c", key.first + 1},
                                     {"degree", key.second},
                                     {"poly", poly_to_string(coeff)}});
          doc["rows"].push_back(std::move(row));
        }
  return doc.dump(2) + "\n";
}

std::string gamma_route_name(GammaRoute route) {
  switch (route) {
  case GammaRoute::Closed:
    return "closed";
  case GammaRoute::Residue:
    return "residue";
  case GammaRoute::Recursion:
    return "recursion";
  }
  return "closed";
}

std::string gamma_table_text(int window, GammaRoute route, int order,
                             TableFormat format) {
  const std::string rname = gamma_route_name(route);
  GammaTable rec;
  if (route == GammaRoute::Recursion) {
    const MultiPoly a = MultiPoly(3) * MultiPoly::var(ParamId::e1, 1);
    const MultiPoly b =
        (MultiPoly::var(ParamId::e1, 1) - MultiPoly::var(ParamId::e2, 1)) *
        (MultiPoly(2) * MultiPoly::var(ParamId::e1, 1) +
         MultiPoly::var(ParamId::e2, 1));
    rec = gamma_recursion(a, b, window);
  }
  auto value = [&](int n, int m) -> GammaValue {
    switch (route) {
    case GammaRoute::Closed:
      return gamma_closed_form(n, m);
    case GammaRoute::Residue:
      return gamma_residue_oracle(n, m, order);
    case GammaRoute::Recursion:
      return rec.at({n, m});
    }
    return {};
  };
  if (format == TableFormat::Csv) {
    std::ostringstream os;
    os << "n,m,gamma,route\n";
    for (int n = -window; n <= window; ++n)
      for (int m = -window; m <= window; ++m)
        os << n << ',' << m << ',' << poly_to_string(value(n, m)) << ','
           << rname << '\n';
    return os.str();
  }
  ordered_json doc;
  doc["table"] = "gamma";
  doc["route"] = rname;
  doc["window"] = window;
  doc["rows"] = ordered_json::array();
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      doc["rows"].push_back({{"n", n},
                             {"m", m},
                             {"gamma", poly_to_string(value(n, m))},
                             {"route", rname}});
  return doc.dump(2) + "\n";
}

} // namespace knfam
