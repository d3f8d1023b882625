// Command-line surface for the twisted torus knot toolkit: single-knot
// reports, family enumeration, gap certificates and their validation, and
// the invariant oracle suites.
//
// Exit codes: 0 success, 1 certified failure (oracle/validation/search),
// 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ttk/json_io.hpp"

namespace {

constexpr long long kBraidEmitCap = 1'000'000;     // letters
constexpr long long kInvariantCrossingCap = 2000;  // burau work bound
constexpr int kInvariantStrandCap = 50;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw ttk::invalid_input("cannot open output file " + path);
    f << text;
  }
};

int fail_input(const std::string& kind, const std::string& msg) {
  ttk::json err{{"error", ttk::json{{"kind", kind}, {"message", msg}}}};
  std::cerr << ttk::dump_canonical(err);
  return 2;
}

int fail_certified(const std::string& kind, const std::string& msg) {
  ttk::json err{{"error", ttk::json{{"kind", kind}, {"message", msg}}}};
  std::cerr << ttk::dump_canonical(err);
  return 1;
}

long long search_bound_default() {
  if (const char* env = std::getenv("TTK_SEARCH_BOUND")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring unparsable TTK_SEARCH_BOUND\n";
  }
  return ttk::kDefaultSearchBound;
}

// inclusive "lo..hi" or a single value
std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    const long long lo = std::stoll(text.substr(0, dots));
    const long long hi = std::stoll(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw ttk::invalid_input("bad range '" + text + "', expected lo..hi");
  }
}

std::string cert_state(ttk::CertState s) {
  return s == ttk::CertState::certified ? "certified" : "unknown";
}

// ---------------------------------------------------------------- info ----

std::string render_info_text(const ttk::json& doc) {
  std::ostringstream os;
  const auto& p = doc.at("params");
  os << "T(" << p[0] << "," << p[1] << "," << p[2] << "," << p[3] << ")\n";
  const auto& braid = doc.at("braid");
  os << "braid: strands " << braid.at("strands") << ", crossings "
     << braid.at("crossing_count") << ", exponent sum "
     << braid.at("exponent_sum") << ", components "
     << braid.at("components") << "\n";
  os << "surface slope: " << doc.at("surface_slope") << "\n";
  for (const auto& rep : doc.at("spectrum")) {
    os << "b_" << rep.at("genus").get<int>() << ":";
    if (rep.contains("exact")) os << " exact " << rep.at("exact");
    else {
      if (rep.contains("lower")) os << " lower " << rep.at("lower");
      if (rep.contains("upper")) os << " upper " << rep.at("upper");
      if (!rep.contains("lower") && !rep.contains("upper")) os << " unknown";
    }
    for (const auto& cit : rep.at("provenance"))
      os << "\n    [" << cit.at("result").get<std::string>() << "] "
         << cit.at("hypotheses_checked").get<std::string>();
    os << "\n";
  }
  const auto& hyp = doc.at("hyperbolicity");
  os << "hyperbolicity: link " << hyp.at("link_status").get<std::string>()
     << ", knot " << hyp.at("knot_status").get<std::string>() << "\n";
  os << "primitive: H1 " << (doc.at("primitive_h1").get<bool>() ? "yes" : "no")
     << ", H2 " << (doc.at("primitive_h2").get<bool>() ? "yes" : "no")
     << "; tunnel number one "
     << doc.at("tunnel_number_one").get<std::string>() << "\n";
  return os.str();
}

int cmd_info(const ttk::TTKParams& params, const std::string& format,
             const Output& out) {
  ttk::validate(params);
  ttk::json doc;
  doc["params"] = ttk::to_json(params);
  // Statistics come from the closed formulas; the word itself can be
  // astronomically long at certificate scale.
  doc["braid"] = ttk::json{{"strands", params.p},
                           {"crossing_count", ttk::ttk_crossing_count(params)},
                           {"exponent_sum", ttk::ttk_exponent_sum(params)},
                           {"components", 1}};
  doc["surface_slope"] = ttk::surface_slope(params);
  ttk::json spectrum = ttk::json::array();
  for (const ttk::BoundReport& rep : ttk::spectrum_report(params))
    spectrum.push_back(ttk::to_json(rep));
  doc["spectrum"] = std::move(spectrum);
  doc["hyperbolicity"] = ttk::to_json(ttk::hyperbolicity(params));
  doc["primitive_h1"] = ttk::primitive_h1(params);
  doc["primitive_h2"] = ttk::primitive_h2(params);
  doc["tunnel_number_one"] = cert_state(ttk::tunnel_number_one(params));

  out.write(format == "text" ? render_info_text(doc)
                             : ttk::dump_canonical(doc));
  return 0;
}

// --------------------------------------------------------------- braid ----

int cmd_braid(const ttk::TTKParams& params, const std::string& format,
              const Output& out) {
  ttk::validate(params);
  if (ttk::ttk_crossing_count(params) > kBraidEmitCap)
    throw ttk::invalid_input(
        "braid word has " + std::to_string(ttk::ttk_crossing_count(params)) +
        " letters, above the emission cap " + std::to_string(kBraidEmitCap));
  const ttk::BraidWord b = ttk::ttk_braid(params);
  if (format == "text")
    out.write(ttk::to_text(b) + "\n");
  else
    out.write(ttk::dump_canonical(ttk::to_json(b)));
  return 0;
}

// ---------------------------------------------------------- invariants ----

int cmd_invariants(const std::optional<ttk::TTKParams>& params,
                   const std::string& word, int jones_cap,
                   const std::string& format, const Output& out) {
  ttk::BraidWord b;
  if (params) {
    ttk::validate(*params);
    if (ttk::ttk_crossing_count(*params) > kInvariantCrossingCap ||
        params->p > kInvariantStrandCap)
      throw ttk::invalid_input(
          "parameters exceed the invariant computation caps (" +
          std::to_string(kInvariantCrossingCap) + " crossings, " +
          std::to_string(kInvariantStrandCap) + " strands)");
    b = ttk::ttk_braid(*params);
  } else if (!word.empty()) {
    b = ttk::parse_braid_text(word);
    if (static_cast<long long>(b.crossing_count()) > kInvariantCrossingCap ||
        b.strands > kInvariantStrandCap)
      throw ttk::invalid_input("braid exceeds the invariant computation caps");
  } else {
    throw ttk::invalid_input("need either p q r s or --word");
  }

  const ttk::InvariantReport rep = ttk::invariant_report(b, jones_cap);
  if (format == "text") {
    std::ostringstream os;
    os << "crossings: " << rep.crossing_count << "\n";
    os << "alexander: " << ttk::to_string(rep.alexander) << "\n";
    os << "determinant: " << rep.determinant.str() << "\n";
    if (rep.jones)
      os << "jones: " << ttk::to_string(*rep.jones) << "\n";
    else
      os << "jones: skipped (crossings exceed cap " << jones_cap << ")\n";
    out.write(os.str());
  } else {
    out.write(ttk::dump_canonical(ttk::to_json(rep, jones_cap)));
  }
  return 0;
}

// -------------------------------------------------------- certify-gaps ----

std::string render_cert_text(const ttk::GapCertificate& cert) {
  std::ostringstream os;
  os << "gap certificate for C = " << cert.C << "\n";
  os << "  pair: alpha (" << cert.pair.a << "," << cert.pair.b << "), beta ("
     << cert.pair.c << "," << cert.pair.d << "," << cert.pair.e << ","
     << cert.pair.f << ")\n";
  os << "  n = " << cert.n << ", s = " << cert.s << ", chi(Q) = "
     << cert.chi_q << "\n";
  os << "  knot: T(" << cert.params.p << "," << cert.params.q << ","
     << cert.params.r << "," << cert.params.s << ")\n";
  os << "  b0 = " << cert.b0 << " (exact), b1 in [" << cert.b1_lower << ", "
     << cert.b1_upper << "], b2 <= " << cert.b2_upper << "\n";
  os << "  gaps: b0 - b1 >= " << cert.gap0 << ", b1 - b2 >= " << cert.gap1
     << "\n";
  os << "  tunnel number one: " << (cert.tunnel_one ? "yes" : "not certified")
     << "\n";
  for (const ttk::HypothesisEntry& e : cert.hypothesis_chain)
    os << "  [" << e.result << "] " << e.quote << "\n";
  return os.str();
}

int cmd_certify_gaps(long long C, const ttk::TwistPair& pair,
                     long long search_bound, const std::string& format,
                     const Output& out) {
  const ttk::GapCertificate cert = ttk::certify_gaps(C, pair, search_bound);
  const ttk::json doc = ttk::to_json(cert);
  // Self-validation: the emitted document must survive the independent
  // re-derivation bit for bit.
  const ttk::ValidationOutcome check = ttk::validate_certificate(doc);
  if (!check.ok)
    throw ttk::internal_error("self-validation failed at field " +
                              check.first_mismatch);
  out.write(format == "text" ? render_cert_text(cert)
                             : ttk::dump_canonical(doc));
  return 0;
}

// ----------------------------------------------------------- enumerate ----

void append_csv_row(std::ostringstream& os, const ttk::FamilyMember& mem) {
  os << mem.family << ',';
  if (mem.l) os << *mem.l << ',';
  os << mem.m << ',' << mem.n << ',' << mem.sign << ',' << mem.params.p << ','
     << mem.params.q << ',' << mem.params.r << ',' << mem.params.s << ','
     << (mem.constraints_ok ? "true" : "false") << ','
     << (mem.primitive_h1 ? "true" : "false") << ','
     << (mem.primitive_h2 ? "true" : "false") << ','
     << (mem.primitive_h1 && mem.primitive_h2 ? "true" : "false") << ','
     << mem.b1_lower << '\n';
}

int cmd_enumerate(const std::string& family, const std::string& m_range,
                  const std::string& n_range, const std::string& l_range,
                  int sign, const std::string& format, const Output& out) {
  if (sign != 1 && sign != -1) throw ttk::invalid_input("sign must be +-1");
  const auto [m_lo, m_hi] = parse_range(m_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  if (m_lo > m_hi || n_lo > n_hi)
    throw ttk::invalid_input("empty parameter range");
  if (m_lo < 2) throw ttk::invalid_input("family parameter m must be >= 2");
  if (n_lo < 1) throw ttk::invalid_input("twist count n must be >= 1");

  long long l_lo = 0, l_hi = 0;
  if (family == "dean2") {
    if (l_range.empty()) throw ttk::invalid_input("dean2 needs --l");
    std::tie(l_lo, l_hi) = parse_range(l_range);
    if (l_lo > l_hi || l_lo < 2)
      throw ttk::invalid_input("dean2 needs l >= 2 and a nonempty range");
  } else if (!l_range.empty()) {
    throw ttk::invalid_input("--l only applies to dean2");
  }

  std::vector<ttk::FamilyMember> rows;
  auto emit = [&](std::optional<long long> l, long long m, long long n) {
    try {
      if (family == "berge")
        rows.push_back(ttk::berge_family(m, n, sign));
      else if (family == "dean1")
        rows.push_back(ttk::dean_family(ttk::DeanKind::one, std::nullopt, m,
                                        n, sign));
      else
        rows.push_back(ttk::dean_family(ttk::DeanKind::two, l, m, n, sign));
    } catch (const ttk::needs_larger_n&) {
      // tuple outside its family's constraint window; nothing to emit
    }
  };

  if (family == "berge" || family == "dean1") {
    for (long long m = m_lo; m <= m_hi; ++m)
      for (long long n = n_lo; n <= n_hi; ++n) emit(std::nullopt, m, n);
  } else if (family == "dean2") {
    for (long long l = l_lo; l <= l_hi; ++l)
      for (long long m = m_lo; m <= m_hi; ++m)
        for (long long n = n_lo; n <= n_hi; ++n) emit(l, m, n);
  } else {
    throw ttk::invalid_input("unknown family '" + family + "'");
  }

  if (format == "json") {
    ttk::json arr = ttk::json::array();
    for (const ttk::FamilyMember& mem : rows) arr.push_back(ttk::to_json(mem));
    out.write(ttk::dump_canonical(arr));
    return 0;
  }
  std::ostringstream os;
  if (family == "dean2")
    os << "family,l,m,n,sign,p,q,r,s,constraints_ok,primitive_h1,"
          "primitive_h2,doubly_primitive,b1_lower\n";
  else
    os << "family,m,n,sign,p,q,r,s,constraints_ok,primitive_h1,primitive_h2,"
          "doubly_primitive,b1_lower\n";
  for (const ttk::FamilyMember& mem : rows) append_csv_row(os, mem);
  out.write(os.str());
  return 0;
}

// -------------------------------------------------------------- oracle ----

int cmd_oracle(const std::string& scope, const ttk::OracleOptions& opts,
               const std::string& format, const Output& out) {
  std::vector<std::pair<std::string, ttk::OracleResult>> results;
  if (scope == "torus" || scope == "all")
    results.emplace_back("torus", ttk::run_torus_oracle(opts));
  if (scope == "symmetry" || scope == "all")
    results.emplace_back("symmetry", ttk::run_symmetry_oracle(opts));
  if (results.empty())
    throw ttk::invalid_input("unknown oracle scope '" + scope + "'");

  bool ok = true;
  int checks = 0;
  for (const auto& [name, res] : results) {
    ok = ok && res.ok();
    checks += res.checks_run;
  }

  if (format == "json") {
    ttk::json doc{{"checks_run", checks}, {"ok", ok}};
    ttk::json failures = ttk::json::array();
    for (const auto& [name, res] : results)
      for (const ttk::OracleFailure& f : res.failures)
        failures.push_back(ttk::json{
            {"scope", name}, {"check", f.check}, {"detail", f.detail}});
    doc["failures"] = std::move(failures);
    out.write(ttk::dump_canonical(doc));
  } else {
    std::ostringstream os;
    for (const auto& [name, res] : results) {
      os << name << ": " << res.checks_run << " checks, "
         << res.failures.size() << " failures\n";
      for (const ttk::OracleFailure& f : res.failures)
        os << "  FAIL " << f.check << ": " << f.detail << "\n";
    }
    os << (ok ? "all oracles consistent" : "oracle failures detected")
       << " (alexander agreement is evidence of torus type, not proof)\n";
    out.write(os.str());
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------- validate ----

int cmd_validate(const std::string& path, const std::string& format,
                 const Output& out) {
  std::ifstream f(path);
  if (!f) throw ttk::invalid_input("cannot open certificate file " + path);
  ttk::json given;
  try {
    f >> given;
  } catch (const ttk::json::exception& e) {
    throw ttk::invalid_input(std::string("malformed JSON: ") + e.what());
  }

  try {
    const ttk::ValidationOutcome res = ttk::validate_certificate(given);
    ttk::json doc{{"valid", res.ok}};
    if (!res.ok) doc["first_mismatch"] = res.first_mismatch;
    if (format == "text")
      out.write(res.ok ? "valid\n"
                       : "INVALID at field " + res.first_mismatch + "\n");
    else
      out.write(ttk::dump_canonical(doc));
    return res.ok ? 0 : 1;
  } catch (const ttk::certificate_invalid& e) {
    ttk::json doc{{"valid", false}, {"reason", e.what()}};
    if (format == "text")
      out.write(std::string("INVALID: ") + e.what() + "\n");
    else
      out.write(ttk::dump_canonical(doc));
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted torus knot bridge-spectrum toolkit"};
  app.require_subcommand(1);

  std::string format;  // defaulted per command after parsing
  std::string out_path;
  long long search_bound = search_bound_default();
  int jones_cap = 22;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    cmd->add_option("--out", out_path, "write output to FILE");
  };

  ttk::TTKParams params;
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("p", params.p, "torus parameter p")->required();
    cmd->add_option("q", params.q, "torus parameter q")->required();
    cmd->add_option("r", params.r, "twisted strand count r")->required();
    cmd->add_option("s", params.s, "full twist count s")->required();
  };

  CLI::App* info = app.add_subcommand("info", "single-knot report");
  add_params(info);
  add_common(info);

  CLI::App* braid = app.add_subcommand("braid", "braid word of T(p,q,r,s)");
  add_params(braid);
  add_common(braid);

  CLI::App* inv = app.add_subcommand("invariants",
                                     "alexander/determinant/jones report");
  inv->add_option("p", params.p, "torus parameter p");
  inv->add_option("q", params.q, "torus parameter q");
  inv->add_option("r", params.r, "twisted strand count r");
  inv->add_option("s", params.s, "full twist count s");
  std::string word;
  inv->add_option("--word", word, "braid in text form 's:3 w:1 2 1'");
  inv->add_option("--jones-cap", jones_cap,
                  "skip jones above this crossing count");
  add_common(inv);

  CLI::App* certify =
      app.add_subcommand("certify-gaps", "two-gap certificate for C");
  long long C = 1;
  long long pa = 0, pb = 0, pc = 0, pd = 0, pe = 0, pf = 0;
  certify->add_option("C", C, "gap order")->required();
  certify->add_option("a", pa, "alpha a")->required();
  certify->add_option("b", pb, "alpha b")->required();
  certify->add_option("c", pc, "beta c")->required();
  certify->add_option("d", pd, "beta d")->required();
  certify->add_option("e", pe, "beta e")->required();
  certify->add_option("f", pf, "beta f")->required();
  certify->add_option("--search-bound", search_bound,
                      "twist-count search bound");
  add_common(certify);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "berge/dean family sweep");
  std::string family, m_range, n_range, l_range;
  int sign = 1;
  enumerate->add_option("family", family, "berge | dean1 | dean2")
      ->required()
      ->check(CLI::IsMember({"berge", "dean1", "dean2"}));
  enumerate->add_option("--m", m_range, "range lo..hi")->required();
  enumerate->add_option("--n", n_range, "range lo..hi")->required();
  enumerate->add_option("--l", l_range, "range lo..hi (dean2)");
  enumerate->add_option("--sign", sign, "twist sign +-1");
  add_common(enumerate);

  CLI::App* oracle = app.add_subcommand("oracle", "invariant oracle suites");
  std::string scope = "all";
  ttk::OracleOptions opts;
  oracle->add_option("scope", scope, "torus | symmetry | all")
      ->check(CLI::IsMember({"torus", "symmetry", "all"}));
  oracle->add_option("--max-pq", opts.max_pq, "torus grid bound");
  oracle->add_option("--max-f", opts.max_f, "torus twist range");
  oracle->add_option("--samples", opts.samples, "symmetry sample count");
  oracle->add_option("--max-crossings", opts.max_crossings,
                     "symmetry crossing budget");
  oracle->add_option("--seed", opts.seed, "sampler seed");
  add_common(oracle);

  CLI::App* validate = app.add_subcommand("validate",
                                          "re-derive a gap certificate");
  std::string cert_path;
  validate->add_option("file", cert_path, "certificate JSON file")
      ->required();
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Output out{out_path};
  try {
    // Per-command default and allowed formats.
    auto pick_format = [&](const char* def,
                           std::initializer_list<const char*> allowed) {
      if (format.empty()) format = def;
      for (const char* a : allowed)
        if (format == a) return;
      throw ttk::invalid_input("format '" + format +
                               "' not supported by this command");
    };
    if (*info || *braid || *inv || *certify || *validate)
      pick_format("json", {"json", "text"});
    else if (*enumerate)
      pick_format("csv", {"csv", "json"});
    else if (*oracle)
      pick_format("text", {"text", "json"});

    if (*info) return cmd_info(params, format, out);
    if (*braid) return cmd_braid(params, format, out);
    if (*inv) {
      std::optional<ttk::TTKParams> maybe;
      if (inv->count("p") || inv->count("q") || inv->count("r") ||
          inv->count("s")) {
        if (inv->count("p") + inv->count("q") + inv->count("r") +
                inv->count("s") != 4)
          throw ttk::invalid_input("need all four of p q r s");
        maybe = params;
      }
      return cmd_invariants(maybe, word, jones_cap, format, out);
    }
    if (*certify) {
      const ttk::TwistPair pair = ttk::make_twist_pair(pa, pb, pc, pd, pe, pf);
      return cmd_certify_gaps(C, pair, search_bound, format, out);
    }
    if (*enumerate)
      return cmd_enumerate(family, m_range, n_range, l_range, sign, format,
                           out);
    if (*oracle) return cmd_oracle(scope, opts, format, out);
    if (*validate) return cmd_validate(cert_path, format, out);
  } catch (const ttk::search_exhausted& e) {
    return fail_certified(e.kind(), e.what());
  } catch (const ttk::certificate_invalid& e) {
    return fail_certified(e.kind(), e.what());
  } catch (const ttk::internal_error& e) {
    return fail_certified(e.kind(), e.what());
  } catch (const ttk::needs_larger_n& e) {
    return fail_input(e.kind(), e.what());
  } catch (const ttk::error& e) {
    return fail_input(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail_input("internal", e.what());
  }
  return 2;
}
