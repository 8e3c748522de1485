#include "cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "deg/fixtures.hpp"
#include "deg/graph.hpp"
#include "deg/llt.hpp"
#include "deg/symfunc.hpp"

namespace deg::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_graph_text(const SignedColoredGraph& g, std::ostream& out) {
  out << "type (" << g.n() << "," << g.N() << "), " << g.vertex_count() << " vertices, "
      << g.edge_count() << " edges\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << "  " << g.sigma(v).str();
    if (g.has_stat()) out << "  stat=" << g.stat(v);
    out << "\n";
  }
  for (int c = 2; c <= g.n() - 1; ++c) {
    auto edges = g.edges(c);
    if (edges.empty()) continue;
    out << "  E_" << c << ":";
    for (auto [u, v] : edges) out << " {" << u << "," << v << "}";
    out << "\n";
  }
}

void emit_graph(const SignedColoredGraph& g, const std::string& format, std::ostream& out) {
  if (format == "json") out << graph_to_json(g);
  else if (format == "dot") out << graph_to_dot(g);
  else print_graph_text(g, out);
}

int usage_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return kExitUsage;
}

struct ParsedApp {
  CLI::App app;
  explicit ParsedApp(const std::string& name) : app(name) {
    app.require_subcommand(1);
    app.set_help_flag("-h,--help", "print help");
  }
};

int run_parsed(CLI::App& app, const std::vector<std::string>& args, std::ostream& err,
               const std::function<int()>& body) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run_deg(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParsedApp wrap("deg");
  CLI::App& app = wrap.app;

  std::string partition_text, file, format = "text";
  bool require_iso = false;

  CLI::App* standard = app.add_subcommand("standard", "standard dual equivalence graph of a partition");
  standard->add_option("partition", partition_text)->required();
  standard->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  CLI::App* check = app.add_subcommand("check", "run the six axiom checks on a graph file");
  check->add_option("file", file)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* classify = app.add_subcommand("classify", "classify components against standard graphs");
  classify->add_option("file", file)->required();
  classify->add_flag("--require-iso", require_iso, "fail on multiplicity > 1");
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* gf = app.add_subcommand("gf", "generating function and Schur extraction");
  gf->add_option("file", file)->required();
  gf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* dot = app.add_subcommand("dot", "DOT export of a graph file");
  dot->add_option("file", file)->required();

  return run_parsed(app, args, err, [&]() -> int {
    if (standard->parsed()) {
      emit_graph(standard_graph(Partition::parse(partition_text)), format, out);
      return kExitOk;
    }
    if (check->parsed()) {
      SignedColoredGraph g = graph_from_json(read_file(file));
      AxiomReport report = check_axioms(g);
      if (format == "json") {
        nlohmann::ordered_json j;
        for (int i = 0; i < 6; ++i) {
          j["axiom" + std::to_string(i + 1)]["pass"] = report.axiom[i].pass;
          if (!report.axiom[i].pass)
            j["axiom" + std::to_string(i + 1)]["witness"] = report.axiom[i].witness;
        }
        out << j.dump(2) << "\n";
      } else {
        out << report.str() << "\n";
      }
      return report.all_pass() ? kExitOk : kExitVerificationFailed;
    }
    if (classify->parsed()) {
      SignedColoredGraph g = graph_from_json(read_file(file));
      bool all_ok = true;
      nlohmann::ordered_json jout = nlohmann::ordered_json::array();
      auto comps = g.components();
      for (size_t ci = 0; ci < comps.size(); ++ci) {
        ClassifyResult r = classify_component(g.induced(comps[ci]));
        bool ok = static_cast<bool>(r) && (!require_iso || r.ok->multiplicity == 1);
        all_ok = all_ok && ok;
        if (format == "json") {
          nlohmann::ordered_json jc;
          jc["component"] = ci;
          jc["vertices"] = comps[ci].size();
          if (r) {
            jc["lambda"] = r.ok->lambda.str();
            jc["multiplicity"] = r.ok->multiplicity;
            if (require_iso && r.ok->multiplicity != 1) jc["error"] = "not an isomorphism";
          } else {
            jc["error"] = r.error;
          }
          jout.push_back(std::move(jc));
        } else {
          out << "component " << ci << " (" << comps[ci].size() << " vertices): ";
          if (r) {
            out << "lambda=" << r.ok->lambda.str() << " multiplicity=" << r.ok->multiplicity;
            if (require_iso && r.ok->multiplicity != 1) out << "  [fails --require-iso]";
          } else {
            out << "unclassifiable: " << r.error;
          }
          out << "\n";
        }
      }
      if (format == "json") out << jout.dump(2) << "\n";
      return all_ok ? kExitOk : kExitVerificationFailed;
    }
    if (gf->parsed()) {
      SignedColoredGraph g = graph_from_json(read_file(file));
      QSymExpansion f = generating_function(g);
      SchurExpansion s = extract_schur(f);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["qsym"] = nlohmann::json::parse(qsym_to_json(f));
        j["schur"] = s.str();
        j["in_schur_span"] = s.in_schur_span();
        out << j.dump(2) << "\n";
      } else {
        out << f.str() << "\n" << s.str() << "\n";
      }
      return kExitOk;
    }
    SignedColoredGraph g = graph_from_json(read_file(file));
    out << graph_to_dot(g);
    return kExitOk;
  });
}

int run_sym(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParsedApp wrap("sym");
  CLI::App& app = wrap.app;

  std::string file, mu_text, nu_text;
  CLI::App* extract = app.add_subcommand("extract", "Schur extraction of a QSym JSON file");
  extract->add_option("file", file)->required();
  CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson expansion of s_mu * s_nu");
  lr->add_option("mu", mu_text)->required();
  lr->add_option("nu", nu_text)->required();

  return run_parsed(app, args, err, [&]() -> int {
    if (extract->parsed()) {
      QSymExpansion f = qsym_from_json(read_file(file));
      SchurExpansion s = extract_schur(f);
      out << s.str() << "\n";
      out << (s.in_schur_span() ? "in Schur span" : "not in Schur span (residual above)") << "\n";
      return kExitOk;
    }
    SchurExpansion s = lr_coefficients(Partition::parse(mu_text), Partition::parse(nu_text));
    out << s.str() << "\n";
    return kExitOk;
  });
}

namespace {

nlohmann::ordered_json conjecture_record(const ConjectureReport& r) {
  nlohmann::ordered_json j;
  j["shape"] = r.shape.str();
  j["pass"] = r.pass;
  j["classes"] = r.components.size();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const ComponentVerdict& c : r.components) {
    if (c.pass) continue;
    nlohmann::ordered_json jc;
    jc["dinv"] = c.dinv;
    jc["vertices"] = c.vertices;
    jc["expansion"] = c.expansion.str();
    failures.push_back(std::move(jc));
  }
  if (!failures.empty()) j["failures"] = std::move(failures);
  return j;
}

}  // namespace

int run_llt(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParsedApp wrap("llt");
  CLI::App& app = wrap.app;

  std::string shape_text, shape_a, shape_b;
  bool want_dot = false, want_json = false, include_skew = false;
  int max_size = 8, k_bound = 4, jobs = 1, ribbon_n = 0;

  CLI::App* poly = app.add_subcommand("poly", "LLT polynomial and its Schur expansion");
  poly->add_option("shape", shape_text)->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "the D-involution graph of a tuple shape");
  graph_cmd->add_option("shape", shape_text)->required();
  graph_cmd->add_flag("--dot", want_dot);
  graph_cmd->add_flag("--json", want_json);

  CLI::App* verify2 = app.add_subcommand("verify2", "strong dual equivalence for a 2-tuple");
  verify2->add_option("shape1", shape_a)->required();
  verify2->add_option("shape2", shape_b)->required();

  CLI::App* conjecture = app.add_subcommand("conjecture", "Schur positivity sweep over tuple shapes");
  conjecture->add_option("--max-size", max_size);
  conjecture->add_option("--k", k_bound);
  conjecture->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  conjecture->add_flag("--skew", include_skew, "also sweep 2-tuples with skew components");

  CLI::App* ribbons = app.add_subcommand("ribbon-classes", "twisted classes of the symmetric group");
  ribbons->add_option("n", ribbon_n)->required()->check(CLI::Range(1, 8));

  return run_parsed(app, args, err, [&]() -> int {
    if (poly->parsed()) {
      QSymExpansion f = llt_polynomial(TupleShape::parse(shape_text));
      SchurExpansion s = extract_schur(f);
      out << f.str() << "\n" << s.str() << "\n";
      return kExitOk;
    }
    if (graph_cmd->parsed()) {
      SignedColoredGraph g = d_graph(TupleShape::parse(shape_text));
      emit_graph(g, want_dot ? "dot" : want_json ? "json" : "text", out);
      return kExitOk;
    }
    if (verify2->parsed()) {
      TupleShape mu({SkewShape::parse(shape_a), SkewShape::parse(shape_b)});
      TwoTupleReport r = verify_two_tuple(mu);
      if (!r.pass) {
        out << "fail\n" << r.axioms.str() << "\n";
        return kExitVerificationFailed;
      }
      out << r.ktilde.str() << "\n";
      return kExitOk;
    }
    if (conjecture->parsed()) {
      std::vector<TupleShape> shapes;
      for (int k = 1; k <= k_bound; ++k)
        for (int n = 1; n <= max_size; ++n)
          for (TupleShape& s : straight_tuples(k, n)) shapes.push_back(std::move(s));
      if (include_skew) {
        // 2-tuples with skew components, bounded outer box, total size <= 6.
        std::vector<SkewShape> skews;
        for (int outn = 1; outn <= 6; ++outn)
          for (const Partition& outer : partitions_of(outn))
            for (int inn = 1; inn < outn; ++inn)
              for (const Partition& inner : partitions_of(inn))
                if (outer.contains(inner) && outer.part(1) <= 4 && outer.length() <= 4)
                  skews.emplace_back(outer, inner);
        for (size_t i = 0; i < skews.size(); ++i)
          for (size_t j = 0; j < skews.size(); ++j)
            if (skews[i].size() + skews[j].size() <= std::min(max_size, 6))
              shapes.push_back(TupleShape({skews[i], skews[j]}));
      }
      std::vector<nlohmann::ordered_json> records(shapes.size());
      std::atomic<size_t> next{0};
      std::atomic<bool> all_pass{true};
      auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < shapes.size(); i = next.fetch_add(1)) {
          ConjectureReport r = verify_conjecture(shapes[i]);
          if (!r.pass) all_pass = false;
          records[i] = conjecture_record(r);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      for (const auto& rec : records) out << rec.dump() << "\n";
      return all_pass ? kExitOk : kExitVerificationFailed;
    }
    // ribbon-classes
    for (const auto& cls : twisted_classes(ribbon_n)) {
      nlohmann::ordered_json j;
      std::vector<std::string> words;
      for (const auto& w : cls) {
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) s += std::to_string(w[i]);
        words.push_back(std::move(s));
      }
      j["class"] = words;
      j["size"] = cls.size();
      j["inv"] = inv_number(cls[0]);
      j["first_last_inversion"] = cls[0].front() > cls[0].back();
      j["expansion"] = twisted_class_expansion_words(cls).str();
      out << j.dump() << "\n";
    }
    return kExitOk;
  });
}

}  // namespace deg::cli
