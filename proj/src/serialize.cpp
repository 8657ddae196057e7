#include "ptau/serialize.hpp"

#include "ptau/errors.hpp"

namespace ptau {

namespace {

nlohmann::json terms_json(const MultiPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms()) arr.push_back({{"exp", t.exp}, {"coeff", rational_to_string(t.coeff)}});
  return arr;
}

MultiPoly terms_from(const SymbolsPtr& syms, const nlohmann::json& arr) {
  std::vector<Term> terms;
  try {
    for (const auto& t : arr)
      terms.push_back(Term{t.at("exp").get<Exponents>(), parse_rational(t.at("coeff").get<std::string>())});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return MultiPoly::from_terms(syms, std::move(terms));
}

SymbolsPtr symbols_from(const nlohmann::json& j) {
  try {
    return make_symbols(j.at("symbols").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("missing symbol table: ") + e.what());
  }
}

}  // namespace

nlohmann::json poly_to_json(const MultiPoly& p) {
  return {{"symbols", p.symbols()->names()}, {"terms", terms_json(p)}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  auto syms = symbols_from(j);
  return terms_from(syms, j.value("terms", nlohmann::json::array()));
}

nlohmann::json ratfunc_to_json(const RatFunc& r) {
  return {{"symbols", r.symbols()->names()}, {"num", terms_json(r.numerator())}, {"den", terms_json(r.denominator())}};
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  auto syms = symbols_from(j);
  return RatFunc(terms_from(syms, j.value("num", nlohmann::json::array())),
                 terms_from(syms, j.value("den", nlohmann::json::array())));
}

}  // namespace ptau
