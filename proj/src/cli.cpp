#include "maxdla/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxdla/errors.hpp"
#include "maxdla/io.hpp"
#include "maxdla/relations.hpp"
#include "maxdla/solvers.hpp"
#include "maxdla/tree.hpp"

namespace maxdla::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kText, kRecords };

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Arrangement parse_arrangement(const Instance& inst, const std::string& text) {
  std::istringstream in(text);
  std::vector<Vertex> order;
  std::string token;
  while (in >> token) order.push_back(inst.lookup(token));
  if (static_cast<int>(order.size()) != inst.digraph.num_vertices()) {
    throw InputError("arrangement lists " + std::to_string(order.size()) + " vertices, instance has " +
                     std::to_string(inst.digraph.num_vertices()));
  }
  return Arrangement(std::move(order));
}

Json labels(const Instance& inst, std::span<const Vertex> vertices) {
  Json out = Json::array();
  for (Vertex v : vertices) {
    if (inst.names.empty()) {
      out.push_back(v);
    } else {
      out.push_back(inst.label(v));
    }
  }
  return out;
}

Json positions(const Arrangement& arr) {
  Json out = Json::array();
  for (Vertex v = 0; v < arr.size(); ++v) out.push_back(arr.position(v));
  return out;
}

std::string render_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "pass" : "fail";
  return v.dump();
}

void print_text(const std::string& key, const Json& value, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) print_text(key.empty() ? k : key + "." + k, v, out);
    return;
  }
  out << key << ":";
  if (value.is_array()) {
    for (const Json& item : value) out << ' ' << render_scalar(item);
  } else {
    out << ' ' << render_scalar(value);
  }
  out << '\n';
}

void emit(const Json& report, Format format, std::ostream& out) {
  if (format == Format::kRecords) {
    out << report.dump() << '\n';
  } else {
    print_text("", report, out);
  }
}

std::string compact_range(std::span<const Vertex> vs) {
  if (vs.empty()) return "";
  const bool contiguous = std::adjacent_find(vs.begin(), vs.end(), [](Vertex a, Vertex b) { return b != a + 1; }) ==
                          vs.end();
  if (contiguous && vs.size() > 2) return std::to_string(vs.front()) + "-" + std::to_string(vs.back());
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

Digraph random_digraph(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::bernoulli_distribution coin(0.4);
  const int n = size(rng);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) d.add_arc(u, v);
    }
  }
  return d;
}

Json bounds_json(const BoundsReport& r) {
  Json j;
  j["n"] = r.n;
  j["t"] = r.max_dicut;
  j["maxdla"] = r.maxdla;
  j["lower"] = r.lower();
  j["upper"] = r.upper;
  j["holds"] = r.holds;
  return j;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::kAuto;
  if (name == "oracle") return Method::kOracle;
  if (name == "tree") return Method::kTree;
  if (name == "tournament") return Method::kTournament;
  if (name == "tdag") return Method::kTransitiveDag;
  if (name == "delta2") return Method::kDelta2;
  throw InputError("unknown method '" + name + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kOracle: return "oracle";
    case Method::kTree: return "tree";
    case Method::kTournament: return "tournament";
    case Method::kTransitiveDag: return "tdag";
    case Method::kDelta2: return "delta2";
  }
  return "auto";
}

CertificateOutput solve_instance(const Digraph& d, const SolveOptions& options) {
  Method method = options.method;
  if (method == Method::kAuto) {
    switch (detect_class(d)) {
      case DigraphClass::kTournament: method = Method::kTournament; break;
      case DigraphClass::kTransitiveDag: method = Method::kTransitiveDag; break;
      case DigraphClass::kDelta2: method = Method::kDelta2; break;
      case DigraphClass::kOrientedForest:
        method = to_weighted(d).max_degree() <= options.max_degree ? Method::kTree : Method::kOracle;
        break;
      case DigraphClass::kGeneral: method = Method::kOracle; break;
    }
  }

  ArrangementOptimum opt;
  switch (method) {
    case Method::kOracle: opt = brute_maxdla(d, options.limit); break;
    case Method::kTree: opt = maxdla_forest(d, TreeOptions{options.max_degree, false}); break;
    case Method::kTournament: opt = tournament_arrangement(d); break;
    case Method::kTransitiveDag: opt = transitive_dag_arrangement(d); break;
    case Method::kDelta2: opt = delta2_arrangement(d); break;
    case Method::kAuto: break;
  }

  CertificateOutput cert;
  cert.method = method;
  cert.value = opt.value;
  cert.arrangement = opt.arrangement;
  cert.signature = signature(d, cert.arrangement);
  cert.verified = arrangement_value(d, cert.arrangement) == cert.value && cert.signature.sum() == cert.value;
  if (!cert.verified) throw VerificationError("solver certificate does not re-verify against the instance");
  return cert;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum directed linear arrangement toolkit", "maxdla"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  std::string file;
  std::string arrangement_text;
  std::string method_name = "auto";
  std::string kind;
  int limit = kDefaultArrangementLimit;
  int cut_limit = kDefaultCutLimit;
  int max_degree = 4;
  std::uint64_t seed = 1;
  int samples = 0;

  auto* value_cmd = app.add_subcommand("value", "Evaluate an arrangement: value, signature, levels");
  value_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  value_cmd->add_option("--arrangement", arrangement_text, "Vertex sequence, first to last")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Find a maximum-value arrangement");
  solve_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--method", method_name, "auto|oracle|tree|tournament|tdag|delta2")
      ->check(CLI::IsMember({"auto", "oracle", "tree", "tournament", "tdag", "delta2"}))
      ->capture_default_str();
  solve_cmd->add_option("--limit", limit, "Vertex cap for exhaustive search")->capture_default_str();
  solve_cmd->add_option("--max-degree", max_degree, "Degree bound for the forest solver")->capture_default_str();

  auto* dicut_cmd = app.add_subcommand("dicut", "Maximum directed cut by enumeration");
  dicut_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  dicut_cmd->add_option("--limit", cut_limit, "Vertex cap for subset enumeration")->capture_default_str();

  auto* reduce_cmd = app.add_subcommand("reduce", "Transform an instance along a reduction");
  reduce_cmd->add_option("kind", kind, "2sat-dicut | dicut-dla")
      ->required()
      ->check(CLI::IsMember({"2sat-dicut", "dicut-dla"}));
  reduce_cmd->add_option("file", file, "Input file ('-' for stdin)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a property and report witnesses");
  verify_cmd->add_option("kind", kind, "bounds | maximum | reduction")
      ->required()
      ->check(CLI::IsMember({"bounds", "maximum", "reduction"}));
  verify_cmd->add_option("file", file, "Input file ('-' for stdin)")->required();
  verify_cmd->add_option("--arrangement", arrangement_text, "Arrangement to test (maximum)");
  verify_cmd->add_option("--limit", limit, "Vertex cap for exhaustive search")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  verify_cmd->add_option("--samples", samples, "Extra random digraphs to check (bounds)")->capture_default_str();

  auto* complement_cmd = app.add_subcommand("complement", "Emit the complement digraph");
  complement_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  complement_cmd->add_option("--arrangement", arrangement_text, "Also report both values under this arrangement");

  auto* minla_cmd = app.add_subcommand("minla-complement", "Minimum linear arrangement via the complement forest");
  minla_cmd->add_option("file", file, "Undirected graph as an instance file ('-' for stdin)")->required();
  minla_cmd->add_option("--max-degree", max_degree, "Degree bound for the complement forest")->capture_default_str();

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  const Format format = format_name == "records" ? Format::kRecords : Format::kText;

  try {
    Json report;
    if (value_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(file));
      const Arrangement arr = parse_arrangement(inst, arrangement_text);
      const LevelProfile lp = levels(inst.digraph, arr);
      report["command"] = "value";
      report["value"] = arrangement_value(inst.digraph, arr);
      report["value_by_cuts"] = value_by_cuts(inst.digraph, arr);
      report["value_by_levels"] = value_by_levels(inst.digraph, arr);
      report["arrangement"] = labels(inst, arr.order());
      report["positions"] = positions(arr);
      report["signature"] = signature(inst.digraph, arr).cuts;
      report["levels"] = lp.levels;
      emit(report, format, out);
      return kOk;
    }

    if (solve_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(file));
      SolveOptions options{parse_method(method_name), limit, max_degree};
      const CertificateOutput cert = solve_instance(inst.digraph, options);
      report["command"] = "solve";
      report["problem"] = cert.problem;
      report["class"] = std::string(to_string(detect_class(inst.digraph)));
      report["method"] = to_string(cert.method);
      report["value"] = cert.value;
      report["arrangement"] = labels(inst, cert.arrangement.order());
      report["positions"] = positions(cert.arrangement);
      report["signature"] = cert.signature.cuts;
      report["verified"] = cert.verified;
      emit(report, format, out);
      return kOk;
    }

    if (dicut_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(file));
      const DicutCertificate cut = brute_maxdicut(inst.digraph, cut_limit);
      validate_dicut(inst.digraph, cut);
      report["command"] = "dicut";
      report["problem"] = "maxdicut";
      report["size"] = cut.size;
      report["source_side"] = labels(inst, cut.source_side);
      report["sink_side"] = labels(inst, cut.sink_side);
      report["verified"] = true;
      emit(report, format, out);
      return kOk;
    }

    if (reduce_cmd->parsed()) {
      const std::string text = read_source(file);
      ReductionMap map;
      std::vector<std::string> names;
      if (kind == "2sat-dicut") {
        const TwoCnf phi = parse_2cnf(text);
        map = max2sat_to_dicut(phi);
        names.resize(map.digraph.num_vertices());
        for (int v = 0; v < phi.num_vars(); ++v) names[map.var_vertex[v]] = "x" + std::to_string(v + 1);
        for (std::size_t c = 0; c < map.gadget_vertices.size(); ++c) {
          names[map.gadget_vertices[c]] = "g" + std::to_string(c + 1);
        }
      } else {
        map = dicut_to_dla(parse_digraph(text));
      }
      const std::string instance_text = serialize_digraph(map.digraph, names);
      if (format == Format::kRecords) {
        report["command"] = "reduce";
        report["kind"] = kind;
        report["instance"] = instance_text;
        report["threshold"] = map.threshold_description();
        report["var_vertex"] = map.var_vertex;
        report["gadget_vertices"] = map.gadget_vertices;
        report["original_vertex"] = map.original_vertex;
        report["padding_vertices"] = compact_range(map.padding_vertices);
        emit(report, format, out);
      } else {
        out << instance_text;
        out << "# threshold: " << map.threshold_description() << '\n';
        if (!map.var_vertex.empty()) out << "# var_vertex: " << compact_range(map.var_vertex) << '\n';
        if (!map.gadget_vertices.empty()) out << "# gadget_vertices: " << compact_range(map.gadget_vertices) << '\n';
        if (!map.original_vertex.empty()) out << "# original_vertex: " << compact_range(map.original_vertex) << '\n';
        if (!map.padding_vertices.empty()) {
          out << "# padding_vertices: " << compact_range(map.padding_vertices) << '\n';
        }
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const std::string text = read_source(file);
      report["command"] = "verify";
      report["kind"] = kind;
      bool pass = false;
      if (kind == "bounds") {
        const Instance inst = parse_instance(text);
        const BoundsReport r = check_bounds(inst.digraph, limit);
        report["report"] = bounds_json(r);
        pass = r.holds;
        if (samples > 0) {
          std::mt19937_64 rng(seed);
          int held = 0;
          for (int i = 0; i < samples; ++i) {
            const BoundsReport s = check_bounds(random_digraph(rng, std::min(limit, 7)), limit);
            if (s.holds) {
              ++held;
            } else if (!report.contains("counterexample")) {
              report["counterexample"] = bounds_json(s);
            }
          }
          report["samples"] = samples;
          report["samples_held"] = held;
          pass = pass && held == samples;
        }
      } else if (kind == "maximum") {
        const Instance inst = parse_instance(text);
        const Arrangement arr = arrangement_text.empty()
                                    ? solve_instance(inst.digraph, SolveOptions{Method::kAuto, limit, max_degree})
                                          .arrangement
                                    : parse_arrangement(inst, arrangement_text);
        const Signature sig = signature(inst.digraph, arr);
        const CutProfile profile = cut_profile(inst.digraph);
        pass = sig.cuts == profile.per_k;
        report["arrangement"] = labels(inst, arr.order());
        report["signature"] = sig.cuts;
        report["cut_profile"] = profile.per_k;
      } else if (looks_like_dimacs(text)) {
        const GadgetReport r = verify_gadget_reduction(parse_2cnf(text));
        report["reduction"] = "2sat-dicut";
        report["max_satisfiable"] = r.max_satisfiable;
        report["max_dicut"] = r.max_dicut;
        pass = r.holds;
      } else {
        const PaddingReport r = verify_padding_reduction(parse_digraph(text));
        report["reduction"] = "dicut-dla";
        report["t"] = r.max_dicut;
        report["factor"] = r.factor;
        report["padded_optimum"] = r.padded_optimum;
        report["sandwich_value"] = r.sandwich_value;
        report["cut_count_bound"] = r.cut_count_bound;
        report["reaches_t"] = r.reaches_t;
        report["misses_t_plus_one"] = r.misses_t_plus_one;
        pass = r.holds();
      }
      report["status"] = pass;
      emit(report, format, out);
      return pass ? kOk : kVerificationFailure;
    }

    if (complement_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(file));
      const Digraph comp = complement(inst.digraph);
      std::optional<ComplementBridge> bridge;
      if (!arrangement_text.empty()) bridge = complement_bridge(inst.digraph, parse_arrangement(inst, arrangement_text));
      const std::string instance_text = serialize_digraph(comp, inst.names);
      if (format == Format::kRecords) {
        report["command"] = "complement";
        report["instance"] = instance_text;
        if (bridge) {
          report["val_digraph"] = bridge->val_digraph;
          report["val_complement"] = bridge->val_complement;
          report["total"] = bridge->total;
        }
        emit(report, format, out);
      } else {
        out << instance_text;
        if (bridge) {
          out << "# val_digraph: " << bridge->val_digraph << '\n';
          out << "# val_complement: " << bridge->val_complement << '\n';
          out << "# total: " << bridge->total << '\n';
        }
      }
      return kOk;
    }

    if (minla_cmd->parsed()) {
      const Instance inst = parse_instance(read_source(file));
      const UndirectedGraph g = undirected_from(inst.digraph);
      TreeOptions options;
      options.max_degree = max_degree;
      const ArrangementOptimum opt = minla_complement(g, options);
      report["command"] = "minla-complement";
      report["problem"] = "minla";
      report["value"] = opt.value;
      report["arrangement"] = labels(inst, opt.arrangement.order());
      report["positions"] = positions(opt.arrangement);
      report["verified"] = linear_arrangement_cost(g, opt.arrangement) == opt.value;
      emit(report, format, out);
      return kOk;
    }
  } catch (const SizeLimitError& e) {
    err << "refused: " << e.what() << '\n';
    return kSizeRefusal;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace maxdla::cli
