#include "nilreal/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace nilreal::atlas {

bool OrbitRecord::healthy() const {
  if (verification) {
    const Verification& v = *verification;
    if (!(v.anticommutes && v.square_ok && v.form_ok && v.det_ok && v.component_ok && v.group_level.value_or(true)))
      return false;
  }
  return oracle_agrees.value_or(true) && predicate_agrees.value_or(true) && structure_ok.value_or(true);
}

namespace {

void fill_family(OrbitRecord& r, const FamilySpec& fam) {
  r.family = family_name(fam.family);
  if (fam.has_signature()) {
    r.p = fam.p;
    r.q = fam.q;
  } else if (fam.family == Family::Sp_C || fam.family == Family::Sp_nR) {
    r.n = fam.dim / 2;
  } else {
    r.n = fam.dim;
  }
}

Verification to_verification(const WitnessReport& w, std::optional<bool> group_level) {
  return {w.anticommutes, w.square_ok, w.form_ok, w.det_ok, w.component_ok, group_level};
}

void perturb(Witness& w) { w.g(0, 0) += Scalar::one(w.g.ring()); }

/// Signs expected for (-X, H, -Y): free even rows swap (p, q), everything else is unchanged.
SignedYoungDiagram flipped(Family f, const SignedYoungDiagram& d) {
  std::vector<SignedPart> rows = d.rows();
  for (auto& r : rows)
    if (r.d % 2 == 0 && row_sign_rule(f, r.d) == RowSigns::free) std::swap(r.p, r.q);
  return SignedYoungDiagram(rows);
}

}  // namespace

std::string structure_failure(const TripleData& t, const std::optional<Witness>& w) {
  const Rational two = 2;
  if (!(commutator(t.H, t.X) == two * t.X)) return "[H,X] != 2X";
  if (!(commutator(t.H, t.Y) == Rational(-2) * t.Y)) return "[H,Y] != -2Y";
  if (!(commutator(t.X, t.Y) == t.H)) return "[X,Y] != H";
  for (const Mat* m : {&t.X, &t.H, &t.Y})
    if (!in_algebra(*m, t.group)) return "triple element outside the algebra";
  if (t.form) {
    const Mat& g = t.form->gram;
    if (!(sigma_transpose(t.X, t.form->sigma) * g + g * t.X).is_zero()) return "Gram invariance fails";
    if (t.form->epsilon == 1 && t.family.has_signature()) {
      auto sig = signature(*t.form);
      if (sig.first != t.family.p || sig.second != t.family.q) return "Gram signature differs from target";
    }
  }
  // rank(X^k) = sum over parts of t_d * max(d - k, 0).
  const Partition lambda = t.diagram.partition();
  for (int k = 0; k <= lambda.largest(); ++k) {
    std::size_t expect = 0;
    for (const auto& part : lambda.parts())
      expect += static_cast<std::size_t>(part.t * std::max(part.d - k, 0));
    if (rank(power(t.X, static_cast<unsigned>(k))) != expect) return "rank sequence disagrees with partition";
  }
  const Family f = t.family.family;
  if (!(diagram_from_triple(t.X, t.H, t.Y, t.form, f) == t.diagram)) return "round trip changed the diagram";
  if (!(diagram_from_triple(-t.X, t.H, -t.Y, t.form, f) == flipped(f, t.diagram))) return "sign-flip law fails";
  if (w) {
    BlockForm bf = matrix_in_B(w->g, t);
    if (!bf.block_upper_triangular) return "witness is not block upper triangular in B";
    if (!bf.epsilon || *bf.epsilon != -1 || !bf.epsilon_pattern) return "witness breaks the epsilon block pattern";
  }
  return {};
}

OrbitRecord process_orbit(const FamilySpec& fam, const SignedYoungDiagram& d, GroupVariant variant, Mode mode,
                          bool fault) {
  OrbitRecord r;
  fill_family(r, fam);
  SignedYoungDiagram canon = canonicalize(fam.family, d);
  r.partition = canon.partition().to_string();
  r.signs = canon.to_string();
  if (mode == Mode::enumerate) return r;

  RealityStatus st = classify_nilpotent(fam, canon, variant);
  r.real = st.real;
  r.strongly_real = st.strongly_real;
  r.projectively_strongly_real = st.projectively_strongly_real;
  if (mode == Mode::classify) return r;

  TripleData t = build_representative(fam, canon);
  std::optional<Witness> w;
  try {
    w = best_witness(t, variant);
  } catch (const ObstructionError&) {
  }
  bool strong_found = w && w->kind == WitnessKind::strong;
  r.predicate_agrees = (w.has_value() == st.real) && (strong_found == st.strongly_real);
  if (w) {
    r.witness_kind = kind_name(w->kind);
    if (fault) perturb(*w);
    WitnessReport rep = verify_witness(t, *w);
    r.verification = to_verification(rep, verify_group_level(t, *w));
  }
  if (fam.family != Family::SO_pq_identity) r.oracle_agrees = reality_by_diagram(t) == st.real;
  if (mode == Mode::report) r.structure_ok = structure_failure(t, w).empty();
  return r;
}

namespace {

using json = nlohmann::ordered_json;

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::string csv_opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string to_json(const std::vector<OrbitRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json o;
    o["family"] = r.family;
    o["n"] = opt(r.n);
    o["p"] = opt(r.p);
    o["q"] = opt(r.q);
    o["partition"] = r.partition;
    o["signs"] = r.signs;
    o["real"] = opt(r.real);
    o["strongly_real"] = opt(r.strongly_real);
    o["projectively_strongly_real"] = opt(r.projectively_strongly_real);
    o["witness_kind"] = r.witness_kind;
    if (r.verification) {
      const auto& v = *r.verification;
      o["verification"] = json{{"anticommutes", v.anticommutes}, {"square_ok", v.square_ok},
                               {"form_ok", v.form_ok},           {"det_ok", v.det_ok},
                               {"component_ok", v.component_ok}, {"group_level", opt(v.group_level)}};
    } else {
      o["verification"] = nullptr;
    }
    o["oracle_agrees"] = opt(r.oracle_agrees);
    o["predicate_agrees"] = opt(r.predicate_agrees);
    o["structure_ok"] = opt(r.structure_ok);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<OrbitRecord>& records) {
  std::ostringstream os;
  os << "family,n,p,q,partition,signs,real,strongly_real,projectively_strongly_real,witness_kind,"
        "anticommutes,square_ok,form_ok,det_ok,component_ok,group_level,oracle_agrees,predicate_agrees,"
        "structure_ok\n";
  for (const auto& r : records) {
    os << r.family << ',' << csv_opt(r.n) << ',' << csv_opt(r.p) << ',' << csv_opt(r.q) << ','
       << csv_quote(r.partition) << ',' << csv_quote(r.signs) << ',' << csv_opt(r.real) << ','
       << csv_opt(r.strongly_real) << ',' << csv_opt(r.projectively_strongly_real) << ',' << r.witness_kind;
    if (r.verification) {
      const auto& v = *r.verification;
      os << ',' << csv_opt(std::optional<bool>(v.anticommutes)) << ',' << csv_opt(std::optional<bool>(v.square_ok))
         << ',' << csv_opt(std::optional<bool>(v.form_ok)) << ',' << csv_opt(std::optional<bool>(v.det_ok)) << ','
         << csv_opt(std::optional<bool>(v.component_ok)) << ',' << csv_opt(v.group_level);
    } else {
      os << ",,,,,,";
    }
    os << ',' << csv_opt(r.oracle_agrees) << ',' << csv_opt(r.predicate_agrees) << ',' << csv_opt(r.structure_ok)
       << '\n';
  }
  return os.str();
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

/// Families reachable from the command line, keyed by flag value.
Family parse_family(const std::string& name) {
  const std::string s = lower(name);
  if (s == "sl_r") return Family::SL_R;
  if (s == "sl_c") return Family::SL_C;
  if (s == "sl_h") return Family::SL_H;
  if (s == "so_c") return Family::SO_C;
  if (s == "sp_c" || s == "sp_nc") return Family::Sp_C;
  if (s == "su") return Family::SU_pq;
  if (s == "so") return Family::SO_pq;
  if (s == "so_star") return Family::SOstar;
  if (s == "sp_r" || s == "sp_nr") return Family::Sp_nR;
  if (s == "sp_hq" || s == "sp_pq") return Family::Sp_pq;
  throw UsageError("unknown family '" + name + "'");
}

GroupVariant parse_variant(const std::string& v) {
  if (v == "standard") return GroupVariant::standard;
  if (v == "identity") return GroupVariant::identity_component;
  if (v == "projective") return GroupVariant::projective;
  if (v == "full") return GroupVariant::full;
  throw UsageError("unknown variant '" + v + "'");
}

Mode parse_mode(const std::string& m) {
  if (m == "enumerate") return Mode::enumerate;
  if (m == "classify") return Mode::classify;
  if (m == "verify") return Mode::verify;
  if (m == "report") return Mode::report;
  throw UsageError("unknown mode '" + m + "'");
}

bool signature_family(Family f) { return f == Family::SU_pq || f == Family::SO_pq || f == Family::Sp_pq; }

FamilySpec make_spec(Family f, int n, int p, int q, GroupVariant variant) {
  switch (f) {
    case Family::SL_R: return FamilySpec::sl_r(n);
    case Family::SL_C: return FamilySpec::sl_c(n);
    case Family::SL_H: return FamilySpec::sl_h(n);
    case Family::SO_C: return variant == GroupVariant::full ? FamilySpec{Family::O_C, n, 0, 0} : FamilySpec::so_c(n);
    case Family::Sp_C: return FamilySpec::sp_c(n);
    case Family::SU_pq: return FamilySpec::su(p, q);
    case Family::SO_pq:
      return variant == GroupVariant::identity_component ? FamilySpec::so_identity(p, q) : FamilySpec::so(p, q);
    case Family::SOstar: return FamilySpec::so_star(n);
    case Family::Sp_nR: return FamilySpec::sp_r(n);
    case Family::Sp_pq: return FamilySpec::sp_pq(p, q);
    default: throw UsageError("family not available from the command line");
  }
}

std::vector<FamilySpec> specs_for(Family f, std::optional<int> n, std::optional<int> p, std::optional<int> q,
                                  std::optional<int> max_size, GroupVariant variant) {
  std::vector<FamilySpec> out;
  if (max_size) {
    if (*max_size < 1) throw UsageError("--max-size must be at least 1");
    for (int s = 1; s <= *max_size; ++s) {
      if (signature_family(f)) {
        for (int pp = s; pp >= 0; --pp) out.push_back(make_spec(f, 0, pp, s - pp, variant));
      } else if (f == Family::Sp_C || f == Family::Sp_nR) {
        if (s % 2 == 0) out.push_back(make_spec(f, s / 2, 0, 0, variant));
      } else {
        out.push_back(make_spec(f, s, 0, 0, variant));
      }
    }
    return out;
  }
  if (signature_family(f)) {
    if (!p || !q) throw UsageError("family needs --p and --q (or --max-size)");
    if (*p < 0 || *q < 0 || *p + *q < 1) throw UsageError("--p and --q must be non-negative with p + q >= 1");
    out.push_back(make_spec(f, 0, *p, *q, variant));
  } else {
    if (!n) throw UsageError("family needs --n (or --max-size)");
    if (*n < 1) throw UsageError("--n must be at least 1");
    out.push_back(make_spec(f, *n, 0, 0, variant));
  }
  return out;
}

std::vector<GaussianRational> parse_eigs(const std::string& text) {
  std::vector<GaussianRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item, Ring::C).as_gaussian());
  if (out.empty()) throw UsageError("--eigs needs at least one value");
  return out;
}

OrbitRecord semisimple_record(Family f, const std::vector<GaussianRational>& values, std::optional<int> n,
                              GroupVariant variant, bool fault) {
  SemisimpleElement s;
  switch (f) {
    case Family::SL_C: s = SemisimpleElement::sl(values); break;
    case Family::Sp_C: s = SemisimpleElement::sp(values); break;
    case Family::SO_C: s = SemisimpleElement::so(values, n.value_or(2 * static_cast<int>(values.size()))); break;
    default: throw UsageError("--semisimple supports sl_c, sp_c and so_c");
  }
  OrbitRecord r;
  r.family = family_name(s.group(variant).family);
  r.n = s.n;
  r.partition = "semisimple";
  std::string sig;
  for (const auto& v : values) sig += (sig.empty() ? "" : ",") + Scalar(v).to_string();
  r.signs = sig;
  RealityStatus st = classify_semisimple(s, variant);
  r.real = st.real;
  r.strongly_real = st.strongly_real;
  r.projectively_strongly_real = st.projectively_strongly_real;
  std::optional<Witness> w;
  try {
    w = witness_semisimple(s, variant);
  } catch (const ObstructionError&) {
  }
  r.predicate_agrees = w.has_value() == st.real && (w && w->kind == WitnessKind::strong) == st.strongly_real;
  if (w) {
    r.witness_kind = kind_name(w->kind);
    if (fault) perturb(*w);
    r.verification = to_verification(verify_witness_against(s.matrix(), *w), std::nullopt);
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reality atlas for nilpotent and semisimple orbits of classical Lie algebras", "atlas"};
  std::string family_s, variant_s = "standard", mode_s = "classify", format_s = "json", out_path, eigs;
  std::optional<int> n, p, q, max_size;
  bool semisimple = false, fault = false;
  app.add_option("--family", family_s, "sl_r, sl_c, sl_h, so_c, sp_c, su, so, so_star, sp_r, sp_hq")->required();
  app.add_option("--n", n, "rank parameter for families without a signature");
  app.add_option("--p", p, "signature p");
  app.add_option("--q", q, "signature q");
  app.add_option("--variant", variant_s, "standard, identity, projective or full");
  app.add_option("--mode", mode_s, "enumerate, classify, verify or report");
  app.add_option("--format", format_s, "json or csv");
  app.add_option("--max-size", max_size, "sweep every size up to this bound");
  app.add_option("--out", out_path, "write the table to this file");
  app.add_flag("--semisimple", semisimple, "classify one semisimple element");
  app.add_option("--eigs", eigs, "comma separated values h1,h2,... for --semisimple");
  app.add_flag("--inject-fault", fault, "perturb one witness entry (self-test of the verifier)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "atlas: " << e.what() << "\n";
    return 2;
  }

  std::vector<OrbitRecord> records;
  try {
    Family family = parse_family(family_s);
    GroupVariant variant = parse_variant(variant_s);
    Mode mode = parse_mode(mode_s);
    if (format_s != "json" && format_s != "csv") throw UsageError("unknown format '" + format_s + "'");
    if (semisimple) {
      if (eigs.empty()) throw UsageError("--semisimple needs --eigs");
      records.push_back(semisimple_record(family, parse_eigs(eigs), n, variant, fault));
    } else {
      for (const auto& spec : specs_for(family, n, p, q, max_size, variant))
        for (const auto& d : enumerate_diagrams(spec)) {
          records.push_back(process_orbit(spec, d, variant, mode, fault));
          if (records.back().verification) fault = false;
        }
    }
    std::string text = format_s == "json" ? to_json(records) : to_csv(records);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + out_path);
      f << text;
    }
  } catch (const UsageError& e) {
    err << "atlas: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "atlas: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "atlas: internal error: " << e.what() << "\n";
    return 1;
  }
  for (const auto& r : records)
    if (!r.healthy()) {
      err << "atlas: check failed for " << r.family << " " << r.signs << "\n";
      return 1;
    }
  return 0;
}

}  // namespace nilreal::atlas
