// Command-line surface: thin wrappers around the library.  Every subcommand
// parses, dispatches and formats; nothing here contains group theory.

#ifndef SPACEFORM_CLI_HPP_
#define SPACEFORM_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rep.hpp"
#include "wolf.hpp"

namespace spaceform {
namespace cli {

inline int hard_cap() {
  if (const char* env = std::getenv("SPACEFORM_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 2048;
}

inline Group read_table_file(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot open " + path);
  Group g = parse_table_text(in);
  if (g.order() > cap)
    fail("TooLarge", "group order " + std::to_string(g.order()) +
                         " exceeds the cap " + std::to_string(cap));
  return g;
}

inline std::string classification_line(const ClassificationResult& c) {
  if (c.accepted()) return format_tuple(*c.tuple);
  return "REJECT " + c.rejection->code + ": " + c.rejection->detail;
}

inline void print_rep_report(std::ostream& out, const StructuredGroup& sg,
                             const RealRep& w, const FreenessCertificate& cert) {
  out << "tuple: " << format_tuple(sg.tuple) << '\n';
  out << "order: " << sg.group.order() << '\n';
  out << "dimension: " << w.dim << '\n';
  std::vector<double> trace_of(sg.group.order(), 0.0);
  for (auto [x, tr] : cert.per_element) trace_of[x] = tr;
  out << "class fixed traces:\n";
  for (const auto& cls : conjugacy_classes(sg.group)) {
    int rep0 = cls[0];
    if (rep0 == 0) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", trace_of[rep0]);
    out << "  class of " << rep0 << " (order " << sg.group.element_order(rep0)
        << ", size " << cls.size() << "): " << buf << '\n';
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", cert.max_fixed_trace);
  out << "max fixed trace: " << buf << '\n';
  out << "verdict: " << to_string(cert.verdict) << '\n';
}

inline void dump_matrices(std::ostream& out, const RealRep& w) {
  for (int x = 0; x < w.group.order(); ++x) {
    out << "element " << x << '\n';
    for (int i = 0; i < w.dim; ++i) {
      for (int j = 0; j < w.dim; ++j) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", w.of(x).at(i, j));
        out << (j ? " " : "") << buf;
      }
      out << '\n';
    }
  }
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite groups acting freely and isometrically on spheres"};
  app.name("spaceform");
  app.require_subcommand(1);
  int cap = hard_cap();

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list canonical tuples");
  int max_order = 0;
  std::string type_filter;
  cmd_enumerate->add_option("--max-order", max_order, "largest group order")->required();
  cmd_enumerate->add_option("--type", type_filter, "restrict to one type I..VI");

  auto* cmd_build = app.add_subcommand("build", "build a Cayley table from a tuple");
  std::string tuple_str, out_path;
  cmd_build->add_option("--tuple", tuple_str, "canonical tuple string")->required();
  cmd_build->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_classify = app.add_subcommand("classify", "classify a Cayley table");
  std::string in_path;
  bool paranoid = false;
  cmd_classify->add_option("--in", in_path, "Cayley table file")->required();
  cmd_classify->add_flag("--paranoid", paranoid, "rebuild and confirm isomorphism");

  auto* cmd_iso = app.add_subcommand("iso", "decide isomorphism of two tables");
  std::string iso_a, iso_b;
  cmd_iso->add_option("file1", iso_a)->required();
  cmd_iso->add_option("file2", iso_b)->required();

  auto* cmd_rep = app.add_subcommand("rep", "free representation certificate");
  std::string rep_tuple;
  double tol = 1e-8;
  bool dump = false;
  cmd_rep->add_option("--tuple", rep_tuple, "canonical tuple string")->required();
  cmd_rep->add_option("--tol", tol, "certification tolerance");
  cmd_rep->add_flag("--dump", dump, "dump matrices row-major");

  auto* cmd_count = app.add_subcommand("count", "isomorphism classes per order");
  int count_max = 0;
  std::string format = "lines";
  cmd_count->add_option("--max-order", count_max, "largest group order")->required();
  cmd_count->add_option("--format", format, "lines | csv");

  auto* cmd_wolf = app.add_subcommand("wolf2", "build a classical type-II presentation");
  int wm = 0, wn = 0, wr = 0, wk = 0, wl = 0;
  std::string wolf_iso;
  cmd_wolf->add_option("m", wm)->required();
  cmd_wolf->add_option("n", wn)->required();
  cmd_wolf->add_option("r", wr)->required();
  cmd_wolf->add_option("k", wk)->required();
  cmd_wolf->add_option("l", wl)->required();
  cmd_wolf->add_option("--iso", wolf_iso, "compare against a Cayley table file");

  try {
    std::vector<const char*> argv{"spaceform"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_enumerate) {
      if (max_order < 1 || max_order > cap) {
        err << "max-order must be between 1 and " << cap << '\n';
        return 2;
      }
      std::optional<TupleType> want;
      if (!type_filter.empty()) {
        want = tuple_type_from_string(type_filter);
        if (!want) {
          err << "unknown type '" << type_filter << "'\n";
          return 2;
        }
      }
      for (const auto& tu : enumerate_tuples(max_order))
        if (!want || tu.type == *want) out << format_tuple(tu) << '\n';
      return 0;
    }
    if (*cmd_build) {
      SpaceFormTuple tu = parse_tuple(tuple_str);
      if (tu.g > cap) fail("TooLarge", "tuple order exceeds the cap");
      StructuredGroup sg = build_tuple(tu);
      std::string text = format_table_text(sg.group);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) fail("IoError", "cannot write " + out_path);
        f << text;
      }
      return 0;
    }
    if (*cmd_classify) {
      Group g = read_table_file(in_path, cap);
      ClassificationResult c = classify(g, ClassifyOptions{paranoid});
      out << classification_line(c) << '\n';
      return c.accepted() ? 0 : 1;
    }
    if (*cmd_iso) {
      Group g1 = read_table_file(iso_a, cap), g2 = read_table_file(iso_b, cap);
      bool same;
      ClassificationResult c1 = classify(g1), c2 = classify(g2);
      if (c1.accepted() && c2.accepted())
        same = invariants_equal(*c1.tuple, *c2.tuple);
      else
        same = is_isomorphic(g1, g2).has_value();
      out << (same ? "ISOMORPHIC" : "NOT ISOMORPHIC") << '\n';
      return same ? 0 : 1;
    }
    if (*cmd_rep) {
      if (tol <= 0) {
        err << "tol must be positive\n";
        return 2;
      }
      SpaceFormTuple tu = parse_tuple(rep_tuple);
      if (tu.g > cap) fail("TooLarge", "tuple order exceeds the cap");
      StructuredGroup sg = build_tuple(tu);
      auto [w, cert] = free_representation(sg, tol);
      print_rep_report(out, sg, w, cert);
      if (dump) dump_matrices(out, w);
      return 0;
    }
    if (*cmd_count) {
      if (count_max < 1 || count_max > cap) {
        err << "max-order must be between 1 and " << cap << '\n';
        return 2;
      }
      std::vector<int> counts(count_max + 1, 0);
      for (const auto& tu : enumerate_tuples(count_max)) ++counts[tu.g];
      if (format == "csv") {
        out << "order,count\n";
        for (int o = 1; o <= count_max; ++o) out << o << ',' << counts[o] << '\n';
      } else if (format == "lines") {
        for (int o = 1; o <= count_max; ++o)
          out << (o > 1 ? " " : "") << o << ':' << counts[o];
        out << '\n';
      } else {
        err << "unknown format '" << format << "'\n";
        return 2;
      }
      return 0;
    }
    if (*cmd_wolf) {
      WolfTypeIIParams p = WolfTypeIIParams::make(wm, wn, wr, wk, wl);
      Group g = build_wolf_II(p);
      out << "order: " << g.order() << '\n';
      ClassificationResult c = classify(g);
      out << classification_line(c) << '\n';
      if (!wolf_iso.empty()) {
        Group other = read_table_file(wolf_iso, cap);
        bool same;
        ClassificationResult c2 = classify(other);
        if (c.accepted() && c2.accepted())
          same = invariants_equal(*c.tuple, *c2.tuple);
        else
          same = is_isomorphic(g, other).has_value();
        out << (same ? "ISOMORPHIC" : "NOT ISOMORPHIC") << '\n';
        return same ? 0 : 1;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace spaceform

#endif  // SPACEFORM_CLI_HPP_
