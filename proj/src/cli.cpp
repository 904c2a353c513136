#include "resloc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "resloc/reconstruction.hpp"
#include "resloc/schubert.hpp"
#include "resloc/tau.hpp"

namespace resloc::cli {

namespace {

constexpr int kDefaultOrder = 5;

enum class Format { Table, Json, Csv };

struct Options {
  Format format = Format::Table;
  int order = kDefaultOrder;
  int m = 2;
  int n = 0;
  int l = 0;
  std::string tau;
  std::string target = "Pn";
  std::vector<int> factors;
  std::vector<std::string> weights;
  bool experimental = false;
};

int default_order() {
  const char* env = std::getenv("RESLOC_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || value < 0)
    throw Error(Errc::InvalidArgument, std::string("RESLOC_MAX_ORDER must be a non-negative integer, got '") + env + "'");
  return value;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : sep) + std::to_string(x);
  return out;
}

std::string index_text(const std::vector<int>& v) { return v.size() == 1 ? std::to_string(v[0]) : "(" + join(v, ",") + ")"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

WeightVector parse_weights(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw Error(Errc::SyntaxError, "bad weight vector '" + text + "'");
    w.push_back(x);
  }
  return WeightVector(std::move(w));
}

std::vector<WeightVector> weight_list(const Options& o, int m) {
  std::vector<WeightVector> out;
  for (const auto& s : o.weights) {
    out.push_back(parse_weights(s));
    if (static_cast<int>(out.back().size()) != m)
      throw Error(Errc::InvalidArgument, "weight vector '" + s + "' needs " + std::to_string(m) + " entries");
  }
  return out;
}

std::string scalar_series_text(const std::vector<Rat>& c) {
  QPoly p;
  for (std::size_t d = 0; d < c.size(); ++d)
    if (c[d] != 0) p[Degree{static_cast<int>(d)}] = c[d];
  return qpoly_to_string(p, {"q"});
}

// One CSV row per (d, t_exp, H_exp) coefficient.
void series_csv(std::ostream& out, const QSeries& s, const std::string& prefix) {
  for (const auto& [d, c] : s.terms())
    for (const auto& [k, coh] : c.terms())
      for (const auto& [e, x] : coh.terms())
        out << prefix << join(d, ";") << "," << k << "," << join(e, ";") << "," << to_string(x) << "\n";
}

void series_table(std::ostream& out, const QSeries& s) {
  for (const auto& [d, c] : s.terms()) out << index_text(d) << "  " << c.to_string() << "\n";
}

JFunction target_j(const Options& o) {
  if (o.target == "Pn") return j_projective(o.n, o.order);
  if (o.target == "hypersurface") return pull_to_hypersurface(mirror_normalize(i_function(o.n, o.l, o.order)).normalized, o.l);
  if (o.target == "product") {
    if (o.factors.size() < 2) throw Error(Errc::InvalidArgument, "--factors needs at least two dimensions");
    JFunction j = j_projective(o.factors[0], o.order);
    for (std::size_t i = 1; i < o.factors.size(); ++i) j = j_product(j, j_projective(o.factors[i], o.order));
    return j;
  }
  throw Error(Errc::InvalidArgument, "unknown target '" + o.target + "'");
}

// ------------------------------------------------------------ subcommands

void cmd_schubert(const Options& o, std::ostream& out) {
  const SymPoly tau = parse_tau(o.tau, o.m);
  if (o.n < o.m) throw Error(Errc::InvalidArgument, "G(m, n) needs n >= m");
  const Rat oracle = schur_integral_oracle(o.m, o.n, tau);
  std::optional<Rat> residue;
  std::optional<bool> formula2;
  if (o.m == 2) {
    residue = grassmann_integral_residue(o.n, tau);
    if (*residue != oracle)
      throw Error(Errc::Inconsistent, "residue " + to_string(*residue) + " differs from Schur oracle " + to_string(oracle));
  }
  if ((o.m == 2 && o.n > 2) || (o.experimental && o.n > o.m)) {
    std::vector<WeightVector> w = weight_list(o, o.m);
    if (w.empty()) w = o.m == 2 ? std::vector<WeightVector>{WeightVector({0, 1})} : default_weight_samples(o.m, 1, 200);
    const ZetaTable table = flag_pushforward_extract(o.m, o.n, default_weight_samples(o.m, default_sample_count(o.m, o.n)));
    bool ok = true;
    for (const auto& wv : w) ok = ok && formula2_verify(o.m, o.n, tau, wv, table);
    formula2 = ok;
  }
  const std::string where = "G(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")";
  switch (o.format) {
    case Format::Table:
      out << "grassmannian: " << where << "\n";
      out << "tau: " << tau.poly().to_string() << "\n";
      if (residue) out << "residue: " << to_string(*residue) << "\n";
      out << "schur_oracle: " << to_string(oracle) << "\n";
      if (formula2) out << "flag_check" << (o.m > 2 ? " (experimental)" : "") << ": " << (*formula2 ? "holds" : "fails") << "\n";
      out << "value: " << to_string(oracle) << "\n";
      break;
    case Format::Json: {
      Json j{{"m", o.m}, {"n", o.n}, {"tau", tau.poly().to_string()}};
      if (residue) j["residue"] = to_string(*residue);
      j["schur_oracle"] = to_string(oracle);
      if (formula2) j["flag_check"] = *formula2;
      j["value"] = to_string(oracle);
      print_json(out, j);
      break;
    }
    case Format::Csv:
      out << "m,n,tau,value\n" << o.m << "," << o.n << "," << csv_field(tau.poly().to_string()) << "," << to_string(oracle) << "\n";
      break;
  }
}

void cmd_flag_table(const Options& o, std::ostream& out) {
  std::vector<WeightVector> samples = weight_list(o, o.m);
  if (samples.empty()) samples = default_weight_samples(o.m, default_sample_count(o.m, o.n));
  const ZetaTable table = flag_pushforward_extract(o.m, o.n, samples);

  const std::vector<WeightVector> fresh = default_weight_samples(o.m, 3, 50);
  for (const auto& w : fresh)
    for (int i = 0; i < o.m; ++i) {
      const LaurentClass r = flag_identity_residual(table, i, w);
      if (!r.is_zero())
        throw Error(Errc::Inconsistent, "pushforward identity fails at line " + std::to_string(i + 1) + ": " + r.to_string());
    }
  std::optional<bool> closed;
  if (o.m == 2) {
    closed = true;
    for (const auto& [a, c] : table.entries) closed = *closed && c == flag_pushforward_closed_form_m2(o.n, a[0]);
  }

  switch (o.format) {
    case Format::Table:
      out << "flag: Fl(1.." << o.m << "; C^" << o.n << ") -> P^" << o.n - 1 << ", fiber dimension "
          << table.fiber_dimension() << ", " << samples.size() << " weight samples\n";
      out << "A  pi_*(z^A)\n";
      for (const auto& [a, c] : table.entries) out << index_text(a) << "  " << c.to_string() << "\n";
      out << "identity: holds on " << fresh.size() << " fresh weight vectors\n";
      if (closed) out << "closed_form: " << (*closed ? "matches" : "differs") << "\n";
      break;
    case Format::Json: {
      Json entries = Json::object();
      for (const auto& [a, c] : table.entries) {
        Json by_h = Json::object();
        for (const auto& [e, x] : c.terms()) by_h[std::to_string(e[0])] = to_string(x);
        entries[join(a, ",")] = by_h;
      }
      Json ws = Json::array();
      for (const auto& w : samples) ws.push_back(Json(w.values()));
      Json j{{"m", o.m}, {"n", o.n}, {"fiber_dimension", table.fiber_dimension()}, {"samples", ws},
             {"entries", entries}, {"identity_fresh", true}};
      if (closed) j["closed_form"] = *closed;
      print_json(out, j);
      break;
    }
    case Format::Csv:
      out << "A,h_exp,value\n";
      for (const auto& [a, c] : table.entries)
        for (const auto& [e, x] : c.terms()) out << join(a, ";") << "," << e[0] << "," << to_string(x) << "\n";
      break;
  }
}

void cmd_jfun(const Options& o, std::ostream& out) {
  const JFunction j = j_projective(o.n, o.order);
  switch (o.format) {
    case Format::Table:
      out << "J-function of " << j.spec.describe() << ", D = " << o.order << "\n";
      series_table(out, j.series);
      break;
    case Format::Json: print_json(out, j.to_json()); break;
    case Format::Csv:
      out << "d,t_exp,H_exp,value\n";
      series_csv(out, j.series, "");
      break;
  }
}

void cmd_lefschetz(const Options& o, std::ostream& out) {
  const MirrorData m = mirror_normalize(i_function(o.n, o.l, o.order));
  switch (o.format) {
    case Format::Table:
      out << "X_" << o.l << " in P^" << o.n << ", D = " << o.order << "\n";
      out << "a: " << scalar_series_text(m.a) << "\n";
      out << "b: " << scalar_series_text(m.b) << "\n";
      out << "c: " << scalar_series_text(m.c) << "\n";
      out << "normalized J, pushed forward to P^" << o.n << ":\n";
      series_table(out, m.normalized.series);
      break;
    case Format::Json: print_json(out, m.to_json()); break;
    case Format::Csv:
      out << "kind,d,t_exp,H_exp,value\n";
      for (const auto& [name, v] : {std::pair{"a", &m.a}, std::pair{"b", &m.b}, std::pair{"c", &m.c}})
        for (std::size_t d = 1; d < v->size(); ++d) out << name << "," << d << ",,," << to_string((*v)[d]) << "\n";
      series_csv(out, m.normalized.series, "J,");
      break;
  }
}

void cmd_invariants(const Options& o, std::ostream& out) {
  const TwoPointTable t = reconstruct_two_point(target_j(o));
  switch (o.format) {
    case Format::Table:
      out << "two-point invariants of " << t.spec.describe() << ", D = " << t.order << "\n";
      out << "d  a  b  value\n";
      for (const auto& e : invariant_list(t))
        out << index_text(e.d) << "  " << index_text(e.a) << "  " << index_text(e.b) << "  " << to_string(e.value) << "\n";
      break;
    case Format::Json: print_json(out, invariants_to_json(t)); break;
    case Format::Csv: out << invariants_to_csv(t); break;
  }
}

void cmd_qh(const Options& o, std::ostream& out) {
  const TwoPointTable t = reconstruct_two_point(target_j(o));
  std::vector<QuantumMatrix> matrices;
  std::vector<QhRelation> relations;
  for (std::size_t i = 0; i < t.spec.generators(); ++i) {
    matrices.push_back(quantum_mult_matrix(t, i));
    relations.push_back(qh_relation(matrices.back()));
  }
  switch (o.format) {
    case Format::Table:
      for (const auto& r : relations) out << r.to_string() << "\n";
      break;
    case Format::Json: {
      Json rel = Json::array(), mats = Json::array();
      for (const auto& r : relations) rel.push_back(r.to_string());
      for (const auto& m : matrices) mats.push_back(quantum_matrix_to_json(m));
      print_json(out, Json{{"ring", t.spec.to_json()}, {"D", t.order}, {"relations", rel}, {"matrices", mats}});
      break;
    }
    case Format::Csv:
      out << "divisor,relation\n";
      for (const auto& r : relations) out << r.h_name << "," << csv_field(r.to_string()) << "\n";
      break;
  }
}

bool usage_error(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::NotSymmetric:
    case Errc::InvalidArgument:
    case Errc::RepeatedWeight:
    case Errc::ArityMismatch: return true;
    default: return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact localization, quantum Lefschetz and two-point reconstruction computations", "resloc"};
  app.require_subcommand(1);
  app.fallthrough();
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", o.format, "Report format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::function<void()> action;
  auto add = [&](const char* name, const char* help, void (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, &o, &out, fn] { action = [&o, &out, fn] { fn(o, out); }; });
    return sub;
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.order, "Truncation order D in q")->check(CLI::NonNegativeNumber);
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--target", o.target, "Pn, hypersurface or product")
        ->check(CLI::IsMember({"Pn", "hypersurface", "product"}));
    sub->add_option("--n", o.n, "Dimension of the ambient projective space");
    sub->add_option("--l", o.l, "Degree of the hypersurface");
    sub->add_option("--factors", o.factors, "Dimensions of projective factors")->delimiter(',');
    add_order(sub);
  };

  CLI::App* schubert = add("schubert", "Integral of a symmetric polynomial over G(m, n)", cmd_schubert);
  schubert->add_option("--m", o.m, "Rank of the subspaces")->check(CLI::PositiveNumber);
  schubert->add_option("--n", o.n, "Dimension of the ambient space")->required();
  schubert->add_option("--tau", o.tau, "Symmetric polynomial in q1..qm")->required();
  schubert->add_option("--weights", o.weights, "Weight vector for the residue check, e.g. 0,1");
  schubert->add_flag("--experimental", o.experimental, "Also check the residue identity for m >= 3");

  CLI::App* flag = add("flag-table", "Pushforwards of z-monomials from the flag manifold", cmd_flag_table);
  flag->add_option("--m", o.m, "Length of the flag")->required();
  flag->add_option("--n", o.n, "Dimension of the ambient space")->required();
  flag->add_option("--weights", o.weights, "Weight vectors used for extraction (repeatable), e.g. 0,1,3");

  CLI::App* jfun = add("jfun", "J-function of P^n", cmd_jfun);
  jfun->add_option("--n", o.n, "Dimension")->required();
  add_order(jfun);

  CLI::App* lefschetz = add("lefschetz", "Mirror transformation for a degree-l hypersurface", cmd_lefschetz);
  lefschetz->add_option("--n", o.n, "Dimension of the ambient projective space")->required();
  lefschetz->add_option("--l", o.l, "Degree of the hypersurface")->required();
  add_order(lefschetz);

  add_target(add("invariants", "Two-point Gromov-Witten invariants", cmd_invariants));
  add_target(add("qh", "Relations in small quantum cohomology", cmd_qh));

  try {
    o.order = default_order();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (o.target == "hypersurface" && o.l == 0) throw Error(Errc::InvalidArgument, "hypersurface target needs --l");
    if (action) action();
    return kOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error(e.code()) ? kUsage : kMath;
  }
}

}  // namespace resloc::cli
