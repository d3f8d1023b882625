#include "ttk/json_io.hpp"

#include <algorithm>
#include <limits>

namespace ttk {

namespace {

const Int kI64Min = Int(std::numeric_limits<long long>::min());
const Int kI64Max = Int(std::numeric_limits<long long>::max());

long long require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw invalid_input("expected an integer at " + where);
  return j.get<long long>();
}

const json& require_field(const json& j, const std::string& key,
                          const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw invalid_input("missing field '" + key + "' in " + where);
  return j.at(key);
}

}  // namespace

json to_json(const Int& v) {
  if (v >= kI64Min && v <= kI64Max) return v.convert_to<long long>();
  return v.str();
}

json to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({json(e), to_json(c)});
  return arr;
}

json to_json(const BraidWord& b) {
  return json{{"strands", b.strands}, {"letters", b.letters}};
}

json to_json(const TTKParams& params) {
  return json::array({params.p, params.q, params.r, params.s});
}

json to_json(const Citation& c, const char* detail_key) {
  return json{{"result", c.result}, {"quote", c.quote},
              {detail_key, c.detail}};
}

json to_json(const BoundReport& rep) {
  json j{{"genus", rep.genus}};
  if (rep.lower) j["lower"] = *rep.lower;
  if (rep.upper) j["upper"] = *rep.upper;
  if (rep.exact) j["exact"] = *rep.exact;
  json prov = json::array();
  for (const Citation& c : rep.provenance)
    prov.push_back(to_json(c, "hypotheses_checked"));
  j["provenance"] = std::move(prov);
  return j;
}

json to_json(const HyperbolicityStatus& st) {
  auto name = [](CertState s) {
    return s == CertState::certified ? "certified" : "unknown";
  };
  json reasons = json::array();
  for (const Citation& c : st.reasons)
    reasons.push_back(to_json(c, "hypotheses_checked"));
  return json{{"link_status", name(st.link_status)},
              {"knot_status", name(st.knot_status)},
              {"alt_route", st.alt_route},
              {"reasons", std::move(reasons)}};
}

json to_json(const TwistPair& pair) {
  return json{{"alpha", json::array({pair.a, pair.b})},
              {"beta", json::array({pair.c, pair.d, pair.e, pair.f})},
              {"regime", pair.regime == TwistPair::Regime::torus_beta
                             ? "torus_beta"
                             : "generic_beta"}};
}

json to_json(const InvariantReport& rep, int jones_cap) {
  json j{{"alexander", to_json(rep.alexander)},
         {"alexander_text", to_string(rep.alexander)},
         {"determinant", to_json(rep.determinant)},
         {"crossing_count", rep.crossing_count}};
  if (rep.jones) {
    j["jones"] = json{{"status", "computed"},
                      {"poly", to_json(*rep.jones)},
                      {"text", to_string(*rep.jones)}};
  } else {
    j["jones"] = json{{"status", "crossings-exceed-cap"}, {"cap", jones_cap}};
  }
  return j;
}

json to_json(const FamilyMember& mem) {
  json j{{"family", mem.family},
         {"m", mem.m},
         {"n", mem.n},
         {"sign", mem.sign},
         {"params", to_json(mem.params)},
         {"primitive_h1", mem.primitive_h1},
         {"primitive_h2", mem.primitive_h2},
         {"doubly_primitive", mem.primitive_h1 && mem.primitive_h2},
         {"constraints_ok", mem.constraints_ok},
         {"b1_lower", mem.b1_lower}};
  if (mem.l) j["l"] = *mem.l;
  json rec = json::array();
  for (const Citation& c : mem.record)
    rec.push_back(to_json(c, "hypotheses_checked"));
  j["record"] = std::move(rec);
  return j;
}

json to_json(const DistanceTwoCertificate& cert) {
  json j{{"issued", cert.issued},
         {"family", "berge"},
         {"m", cert.m},
         {"n", cert.n},
         {"sign", cert.sign},
         {"params", to_json(cert.params)},
         {"b1_lower", cert.b1_lower}};
  if (cert.issued)
    j["distance"] = 2;
  else
    j["refusal_reason"] = cert.refusal_reason;
  json rec = json::array();
  for (const Citation& c : cert.record)
    rec.push_back(to_json(c, "hypotheses_checked"));
  j["record"] = std::move(rec);
  return j;
}

json to_json(const GapCertificate& cert) {
  json chain = json::array();
  for (const HypothesisEntry& entry : cert.hypothesis_chain) {
    json values = json::object();
    for (const CertValue& v : entry.values) {
      if (v.is_rational)
        values[v.key] = json{{"num", v.num}, {"den", v.den}};
      else
        values[v.key] = v.num;
    }
    chain.push_back(json{{"result", entry.result},
                         {"quote", entry.quote},
                         {"values", std::move(values)}});
  }
  return json{{"C", cert.C},
              {"pair", to_json(cert.pair)},
              {"n", cert.n},
              {"s", cert.s},
              {"params", to_json(cert.params)},
              {"chi_q", cert.chi_q},
              {"bounds", json{{"b0", cert.b0},
                              {"b1", json::array({cert.b1_lower,
                                                  cert.b1_upper})},
                              {"b2_upper", cert.b2_upper}}},
              {"gaps", json::array({cert.gap0, cert.gap1})},
              {"hypothesis_chain", std::move(chain)},
              {"tunnel_one", cert.tunnel_one}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::optional<std::string> first_difference(const json& expected,
                                            const json& given) {
  struct Walker {
    std::optional<std::string> diff;

    void walk(const json& a, const json& b, const std::string& path) {
      if (diff) return;
      // structural kinds must agree; scalar kinds are compared by canonical
      // text below (a parsed 3 is number_unsigned, a constructed 3 is
      // number_integer — same value)
      if (a.is_object() != b.is_object() || a.is_array() != b.is_array()) {
        diff = path;
        return;
      }
      if (a.is_object()) {
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
          const std::string pa = path.empty() ? ia.key() : path + "." + ia.key();
          if (ia.key() != ib.key()) {
            diff = path.empty() ? std::min(ia.key(), ib.key())
                                : path + "." + std::min(ia.key(), ib.key());
            return;
          }
          walk(ia.value(), ib.value(), pa);
          if (diff) return;
          ++ia;
          ++ib;
        }
        if (ia != a.end())
          diff = path.empty() ? ia.key() : path + "." + ia.key();
        else if (ib != b.end())
          diff = path.empty() ? ib.key() : path + "." + ib.key();
        return;
      }
      if (a.is_array()) {
        const std::size_t len = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < len; ++i) {
          walk(a[i], b[i], path + "[" + std::to_string(i) + "]");
          if (diff) return;
        }
        if (a.size() != b.size())
          diff = path + "[" + std::to_string(len) + "]";
        return;
      }
      if (a.dump() != b.dump()) diff = path;
    }
  } walker;
  walker.walk(expected, given, "");
  return walker.diff;
}

ValidationOutcome validate_certificate(const json& given) {
  if (!given.is_object())
    throw invalid_input("certificate must be a JSON object");
  const long long C = require_int(require_field(given, "C", "certificate"),
                                  "C");
  const long long n = require_int(require_field(given, "n", "certificate"),
                                  "n");
  const long long s = require_int(require_field(given, "s", "certificate"),
                                  "s");
  const json& jpair = require_field(given, "pair", "certificate");
  const json& alpha = require_field(jpair, "alpha", "pair");
  const json& beta = require_field(jpair, "beta", "pair");
  if (!alpha.is_array() || alpha.size() != 2)
    throw invalid_input("pair.alpha must be [a, b]");
  if (!beta.is_array() || beta.size() != 4)
    throw invalid_input("pair.beta must be [c, d, e, f]");
  const json& jregime = require_field(jpair, "regime", "pair");
  if (!jregime.is_string())
    throw invalid_input("pair.regime must be a string");
  const std::string regime = jregime.get<std::string>();
  if (regime != "torus_beta" && regime != "generic_beta")
    throw invalid_input("unknown regime '" + regime + "'");

  TwistPair pair;
  pair.a = require_int(alpha[0], "pair.alpha[0]");
  pair.b = require_int(alpha[1], "pair.alpha[1]");
  pair.c = require_int(beta[0], "pair.beta[0]");
  pair.d = require_int(beta[1], "pair.beta[1]");
  pair.e = require_int(beta[2], "pair.beta[2]");
  pair.f = require_int(beta[3], "pair.beta[3]");
  pair.regime = regime == "torus_beta" ? TwistPair::Regime::torus_beta
                                       : TwistPair::Regime::generic_beta;

  ValidationOutcome out;
  out.rebuilt = build_certificate(C, pair, n, s);
  const json expected = to_json(out.rebuilt);
  const std::optional<std::string> diff = first_difference(expected, given);
  if (diff) {
    out.ok = false;
    out.first_mismatch = *diff;
  } else {
    out.ok = true;
  }
  return out;
}

}  // namespace ttk
