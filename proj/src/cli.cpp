#include "hlab/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "hlab/catalog.hpp"
#include "hlab/cone.hpp"
#include "hlab/io.hpp"
#include "hlab/verify.hpp"

namespace hlab {

namespace {

struct Options {
  std::string output;
  std::string format = "json";
  bool all_flats = false;
  std::string source;
  std::string weights;
  std::string matrix;
  std::string catalog_action;
  std::string catalog_name;
  std::vector<std::string> params;
  int samples = 100;
  int count = 100;
  std::uint64_t seed = 1;
};

struct Outcome {
  Json result = Json::object();
  Json identities = Json::array();
  int exit_status = 0;
};

// Accumulates input bytes for the report digest.
class Inputs {
public:
  Json json(const std::string& path) {
    const std::string text = read_text_file(path);
    bytes_ += text;
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError("malformed JSON in " + path + ": " + e.what());
    }
  }
  Source source(const std::string& path) { return source_from_json(json(path)); }
  VecQ weights(const std::string& path) { return weights_from_json(json(path)); }
  MatQ matrix(const std::string& path) { return symmetric_matrix_from_json(json(path)); }
  std::string digest() const { return fnv1a_hex(bytes_); }

private:
  std::string bytes_;
};

void note(Outcome& o, const std::string& name, const std::string& detail = "") {
  o.identities.push_back(Json{{"name", name}, {"passed", true}, {"detail", detail}});
}

std::map<std::string, int> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, int> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("parameter '" + p + "' must look like key=value");
    try {
      std::size_t used = 0;
      const int v = std::stoi(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
      out[p.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw InputError("parameter '" + p + "' needs an integer value");
    }
  }
  return out;
}

Json coordinates_json(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) {
        Json cols = Json::array();
        for (Index j = 0; j < x.cols(); ++j) {
          Json col = Json::array();
          for (Index i = 0; i < x.rows(); ++i) {
            std::ostringstream s;
            s << x(i, j);
            col.push_back(s.str());
          }
          cols.push_back(col);
        }
        return cols;
      },
      m);
}

Json form_json(const HirzebruchForm& f, bool essential, Outcome& o) {
  const auto ki = kernel_and_inertia(f);
  note(o, "kernel_vectors_satisfy_sH", std::to_string(ki.kernel.size()) + " vectors");
  const Rational q1 = q_of_ones(f);
  note(o, "q_of_ones_closed_form", q1.str());
  Json kernel = Json::array();
  for (const auto& v : ki.kernel) kernel.push_back(to_json(v));
  Json irr = Json::array(), red = Json::array();
  for (ElementSet l : f.irreducible_lines) irr.push_back(elements_of(l));
  for (ElementSet l : f.reducible_lines) red.push_back(elements_of(l));
  return Json{{"N", f.N},
              {"n", f.n},
              {"matrix", to_json(f.Q)},
              {"sigma", f.sigma},
              {"B", f.B},
              {"t", f.t},
              {"irreducible_lines", irr},
              {"reducible_lines", red},
              {"inertia", to_json(ki.inertia)},
              {"kernel_dim", ki.kernel.size()},
              {"kernel_basis", kernel},
              {"q_of_ones", q1.str()},
              {"hirzebruch", to_json(hirzebruch_check(f, essential))}};
}

Outcome cmd_catalog(const Options& opt) {
  Outcome o;
  if (opt.catalog_action == "list") {
    Json list = Json::array();
    for (const auto& e : catalog_entries()) {
      list.push_back(Json{{"name", e.name}, {"params", e.params}, {"description", e.description}});
    }
    o.result["families"] = list;
    return o;
  }
  if (opt.catalog_action != "build") throw InputError("catalog action must be 'list' or 'build'");
  if (opt.catalog_name.empty()) throw InputError("catalog build needs a family name");
  const Source s = catalog_build(opt.catalog_name, parse_params(opt.params));
  const Json j = source_to_json(s);
  o.result["name"] = opt.catalog_name;
  o.result["N"] = s.size();
  o.result["rank"] = s.matroid().rank();
  if (!opt.output.empty()) {
    write_text_file(opt.output, j.dump(2) + "\n");
    o.result["written"] = opt.output;
  } else {
    o.result["source"] = j;
  }
  return o;
}

Outcome cmd_analyze(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  const Matroid& m = s.matroid();
  o.result["N"] = m.ground();
  o.result["n"] = s.projective_dimension();
  o.result["rank"] = m.rank();
  o.result["essential"] = s.essential();
  Json comps = Json::array();
  for (ElementSet c : connected_components(m)) comps.push_back(elements_of(c));
  o.result["connected_components"] = comps;

  Json poset = Json::array();
  std::map<int, std::pair<int, int>> counts;
  auto add = [&](const Flat& f, bool irreducible, const Json& coords) {
    Json e{{"flat", elements_of(f.elements)}, {"codim", f.rank}, {"multiplicity", f.size()},
           {"irreducible", irreducible}};
    if (!coords.is_null()) e["coordinates"] = coords;
    poset.push_back(e);
    counts[f.rank].first += 1;
    counts[f.rank].second += irreducible ? 1 : 0;
  };
  if (s.is_arrangement()) {
    for (const auto& sub : intersection_poset(s.arrangement())) {
      add(sub.flat, sub.irreducible, coordinates_json(sub.coordinates));
    }
  } else {
    const auto levels = flats_by_rank(m);
    for (int k = 1; k <= std::min(s.projective_dimension(), m.rank()); ++k) {
      for (const Flat& f : levels[static_cast<std::size_t>(k)]) add(f, is_connected_set(m, f.elements), Json());
    }
  }
  Json summary = Json::array();
  for (const auto& [codim, c] : counts) {
    summary.push_back(Json{{"codim", codim}, {"total", c.first}, {"irreducible", c.second}});
  }
  o.result["poset"] = poset;
  o.result["poset_summary"] = summary;
  if (m.rank() >= 3) {
    o.result["form"] = form_json(build_form(m), s.essential(), o);
  } else {
    o.result["form"] = nullptr;
  }
  return o;
}

Outcome cmd_qform(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  const HirzebruchForm f = build_form(s);
  o.result = form_json(f, s.essential(), o);
  if (!opt.weights.empty()) {
    const VecQ a = in.weights(opt.weights);
    const Rational q = eval_form(f, a);
    note(o, "form_routes_agree");
    const VecQ grad = form_gradient(f, a);
    note(o, "gradient_matches_2Qa");
    o.result["weights"] = to_json(a);
    o.result["q_value"] = q.str();
    o.result["s"] = a.sum().str();
    o.result["s_H"] = to_json(induced_weight_sums(f, a));
    o.result["gradient"] = to_json(grad);
    o.result["leading_chern_coefficient"] = leading_chern_coefficient(f, a).str();
  }
  return o;
}

Outcome cmd_stability(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  const VecQ a = in.weights(opt.weights);
  const auto ctx = make_stability_context(s.matroid());
  const auto r = classify_weights(ctx, a, opt.all_flats);
  const auto cross = classify_weights(ctx, a, !opt.all_flats);
  if (r.stable != cross.stable || r.semistable != cross.semistable || r.klt != cross.klt) {
    throw ConsistencyError("connected-flat and all-flat scans disagree");
  }
  note(o, "connected_and_all_flat_scans_agree");
  o.result = to_json(r);
  o.result["scan"] = opt.all_flats ? "all_flats" : "connected_flats";
  if (!r.stable) {
    if (!r.nonpositive.empty()) {
      o.result["witness"] = Json{{"element", r.nonpositive.front()}};
    } else {
      o.result["witness"] = to_json(r.violations.front());
    }
  }
  o.exit_status = r.stable ? 0 : 1;
  return o;
}

Outcome cmd_stable_point(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  const auto r = interior_stable_point(s);
  if (r.point) {
    note(o, "constructed_point_is_stable");
    o.result["stable_point"] = to_json(*r.point);
  } else {
    o.result["certificate"] = to_json(*r.certificate);
    o.exit_status = 1;
  }
  return o;
}

Outcome cmd_hull(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  const VecQ a = in.weights(opt.weights);
  const auto h = hull_membership(s.matroid(), a);
  note(o, "lp_and_inequalities_agree");
  o.result["member"] = h.member;
  if (h.member) {
    Json mult = Json::array();
    for (const auto& [b, l] : h.multipliers) mult.push_back(Json{{"basis", elements_of(b)}, {"lambda", l.str()}});
    o.result["multipliers"] = mult;
  } else {
    o.result["violated"] = to_json(*h.violated);
    o.exit_status = 1;
  }
  return o;
}

Outcome cmd_copositive(const Options& opt, Inputs& in) {
  Outcome o;
  MatQ p;
  if (!opt.matrix.empty()) {
    if (!opt.source.empty()) throw InputError("give either a source or --matrix, not both");
    p = in.matrix(opt.matrix);
    o.result["matrix_origin"] = "file";
  } else {
    if (opt.source.empty()) throw InputError("copositive needs a source or --matrix");
    p = -build_form(in.source(opt.source)).Q;
    o.result["matrix_origin"] = "-Q";
  }
  const auto c = copositivity_check(p);
  note(o, "minimum_value_matches_point");
  o.result["verdict"] = c.copositive ? "copositive" : "not_copositive";
  o.result["minimum"] = to_json(c.minimum);
  if (c.witness) {
    o.result["witness"] = to_json(*c.witness);
    o.exit_status = 1;
  }
  return o;
}

Outcome cmd_simplex_min(const Options& opt, Inputs& in) {
  Outcome o;
  const auto m = simplex_minimum(in.matrix(opt.matrix));
  note(o, "minimum_value_matches_point");
  o.result = to_json(m);
  return o;
}

Outcome cmd_sample(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  const auto r = sample_stable_cone(s.matroid(), opt.samples, opt.seed);
  o.result["drawn"] = r.drawn;
  o.result["evaluated"] = r.evaluated;
  o.result["seed"] = opt.seed;
  o.result["max_value"] = r.max_value ? Json(r.max_value->str()) : Json(nullptr);
  o.result["argmax"] = r.argmax ? to_json(*r.argmax) : Json(nullptr);
  if (r.witness) {
    o.result["witness"] = Json{{"weights", to_json(*r.witness)}, {"q_value", r.witness_value->str()}};
    o.result["note"] = "Q > 0 on the semistable cone: not realisable as an arrangement";
    o.exit_status = 1;
  }
  return o;
}

Outcome cmd_verify(const Options& opt, Inputs& in) {
  Outcome o;
  const Source s = in.source(opt.source);
  bool ok = true;
  for (const auto& c : run_identity_suite(s, opt.seed, opt.count)) {
    o.identities.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    ok = ok && c.passed;
  }
  o.result["all_passed"] = ok;
  o.result["seed"] = opt.seed;
  o.result["count"] = opt.count;
  o.exit_status = ok ? 0 : 1;
  return o;
}

void print_text(std::ostream& out, const Json& report) {
  out << "command: " << report["command"].get<std::string>() << "\n";
  out << "exit_status: " << report["exit_status"] << "\n";
  for (const auto& [key, value] : report["result"].items()) out << key << ": " << value.dump() << "\n";
  for (const auto& id : report["identities"]) {
    out << (id["passed"].get<bool>() ? "[pass] " : "[FAIL] ") << id["name"].get<std::string>();
    const auto detail = id["detail"].get<std::string>();
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperplane-arrangement and matroid laboratory", "hlab"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", opt.output, "Write the report (or built source) to this file");
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--all-flats", opt.all_flats, "Scan every flat instead of the connected ones");
  };
  auto with_source = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("source", opt.source, "Arrangement or matroid JSON file");
    if (required) o->required();
    add_common(sub);
    return sub;
  };

  auto* catalog = app.add_subcommand("catalog", "List or build catalog families");
  catalog->add_option("action", opt.catalog_action, "list | build")->required();
  catalog->add_option("name", opt.catalog_name, "Family name");
  catalog->add_option("-p,--param", opt.params, "Family parameter key=value");
  add_common(catalog);

  with_source(app.add_subcommand("analyze", "Poset, form and Hirzebruch summary"));
  with_source(app.add_subcommand("qform", "Quadratic form report"))->add_option("--weights", opt.weights);
  with_source(app.add_subcommand("stability", "Classify a weight vector"))
      ->add_option("--weights", opt.weights)
      ->required();
  with_source(app.add_subcommand("stable-point", "Construct a stable interior point"));
  with_source(app.add_subcommand("hull", "Membership in the cone over the matroid polytope"))
      ->add_option("--weights", opt.weights)
      ->required();
  with_source(app.add_subcommand("copositive", "Copositivity of -Q or of a given matrix"), false)
      ->add_option("--matrix", opt.matrix);
  auto* smin = app.add_subcommand("simplex-min", "Minimum of x^T P x over the standard simplex");
  smin->add_option("--matrix", opt.matrix)->required();
  add_common(smin);
  auto* sample = with_source(app.add_subcommand("sample", "Sample Q on the semistable cone"));
  sample->add_option("--samples", opt.samples)->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", opt.seed);
  auto* verify = with_source(app.add_subcommand("verify", "Run the identity suite"));
  verify->add_option("--seed", opt.seed);
  verify->add_option("--count", opt.count)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;

  Inputs in;
  Outcome outcome;
  try {
    if (command == "catalog") outcome = cmd_catalog(opt);
    else if (command == "analyze") outcome = cmd_analyze(opt, in);
    else if (command == "qform") outcome = cmd_qform(opt, in);
    else if (command == "stability") outcome = cmd_stability(opt, in);
    else if (command == "stable-point") outcome = cmd_stable_point(opt, in);
    else if (command == "hull") outcome = cmd_hull(opt, in);
    else if (command == "copositive") outcome = cmd_copositive(opt, in);
    else if (command == "simplex-min") outcome = cmd_simplex_min(opt, in);
    else if (command == "sample") outcome = cmd_sample(opt, in);
    else outcome = cmd_verify(opt, in);
  } catch (const ConsistencyError& e) {
    err << "identity violated: " << e.what() << "\n";
    outcome = Outcome{};
    outcome.result["error"] = e.what();
    outcome.identities.push_back(Json{{"name", "internal_consistency"}, {"passed", false}, {"detail", e.what()}});
    outcome.exit_status = 1;
  } catch (const std::exception& e) {
    // InputError, UnsupportedError, arithmetic domain errors and JSON type errors all stem from the input.
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Json report{{"command", echo},
              {"input_digest", in.digest()},
              {"result", outcome.result},
              {"identities", outcome.identities},
              {"exit_status", outcome.exit_status}};
  std::ostringstream text;
  if (opt.format == "text") {
    print_text(text, report);
  } else {
    text << report.dump(2) << "\n";
  }
  if (!opt.output.empty() && command != "catalog") {
    try {
      write_text_file(opt.output, text.str());
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  } else {
    out << text.str();
  }
  return outcome.exit_status;
}

}  // namespace hlab
