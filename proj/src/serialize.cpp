#include "motif/serialize.hpp"

#include "motif/error.hpp"

namespace motif {

namespace {

Json integer(std::int64_t value) { return std::to_string(value); }

Json edge_list(const EdgeSet& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges.edges()) out.push_back(Json::array({u, v}));
  return out;
}

}  // namespace

Json to_json(const BigInt& value) { return to_decimal(value); }

Json to_json(const Rational& value) {
  Json out;
  out["num"] = to_decimal(boost::multiprecision::numerator(value));
  out["den"] = to_decimal(boost::multiprecision::denominator(value));
  return out;
}

Rational rational_from_json(const Json& j) {
  try {
    return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad rational: ") + e.what());
  }
}

Json to_json(const AlternatingSumReport& report) {
  Json out;
  out["k"] = integer(report.k);
  out["property"] = report.property;
  out["sum"] = to_json(report.sum);
  Json counts = Json::array();
  for (auto c : report.counts_by_size) counts.push_back(std::to_string(c));
  out["counts_by_size"] = counts;
  out["monotone_checked"] = report.monotone_checked;
  out["chi"] = report.chi ? to_json(*report.chi) : Json();
  out["chi_hat"] = report.chi_hat ? to_json(*report.chi_hat) : Json();
  return out;
}

Json to_json(const MonotoneVerdict& verdict, int k, const std::string& property) {
  Json out;
  out["k"] = integer(k);
  out["property"] = property;
  out["monotone"] = verdict.monotone;
  out["counterexample"] = verdict.counterexample ? edge_list(*verdict.counterexample) : Json();
  if (verdict.removed_edge) {
    auto [u, v] = edge_endpoints(*verdict.removed_edge);
    out["removed_edge"] = Json::array({u, v});
  } else {
    out["removed_edge"] = Json();
  }
  return out;
}

Json to_json(const ParityVerdict& verdict) {
  Json out;
  out["period"] = integer(verdict.period);
  out["k"] = integer(verdict.k);
  out["chi_hat"] = to_json(verdict.chi_hat);
  out["odd"] = verdict.odd;
  return out;
}

Json to_json(const FixedPointReport& report) {
  Json out;
  out["p"] = integer(report.p);
  out["property"] = report.property;
  Json simplices = Json::array();
  for (const auto& s : report.simplices) {
    Json members = Json::array();
    for (int i : s.indices()) members.push_back(integer(i));
    simplices.push_back(members);
  }
  out["simplices"] = simplices;
  out["chi_hat_fixed"] = to_json(report.chi_hat_fixed);
  out["chi_hat_full"] = report.chi_hat_full ? to_json(*report.chi_hat_full) : Json();
  if (report.congruence) {
    out["congruence"] = *report.congruence == Congruence::Holds ? "holds" : "violated";
  } else {
    out["congruence"] = Json();
  }
  return out;
}

Json to_json(const HomBasis& basis) {
  Json out;
  out["k"] = integer(basis.k);
  out["property"] = basis.property;
  Json terms = Json::array();
  for (const auto& term : basis.terms) {
    Json t;
    t["graph"] = to_text(term.graph.canon);
    t["aut"] = std::to_string(term.graph.aut_count);
    t["coeff"] = to_json(term.coeff);
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

HomBasis basis_from_json(const Json& j) {
  try {
    HomBasis basis;
    basis.k = std::stoi(j.at("k").get<std::string>());
    basis.property = j.at("property").get<std::string>();
    for (const auto& t : j.at("terms")) {
      const IsoClass cls = canonicalize(from_text(t.at("graph").get<std::string>()));
      if (std::to_string(cls.aut_count) != t.at("aut").get<std::string>()) {
        throw Error(ErrorKind::ParseError, "automorphism count does not match the graph");
      }
      basis.terms.push_back({cls, rational_from_json(t.at("coeff"))});
    }
    std::sort(basis.terms.begin(), basis.terms.end(),
              [](const BasisTerm& a, const BasisTerm& b) { return a.graph.key() < b.graph.key(); });
    return basis;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad basis JSON: ") + e.what());
  }
}

Json to_json(const QueryLedger& ledger) {
  Json queries = Json::array();
  for (const auto& q : ledger.queries) {
    Json entry;
    entry["vertices"] = integer(q.vertices);
    entry["result"] = to_json(q.result);
    queries.push_back(entry);
  }
  return queries;
}

Json to_json(const WindowResult& window) {
  Json out;
  out["n"] = integer(window.n);
  out["k"] = window.k ? integer(*window.k) : Json();
  Json values = Json::array();
  for (const auto& v : window.values) values.push_back(to_json(v));
  out["values"] = values;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace motif
