#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgkernel/classify.hpp"
#include "sgkernel/errors.hpp"
#include "sgkernel/fields.hpp"
#include "sgkernel/hierarchy.hpp"
#include "sgkernel/io.hpp"
#include "sgkernel/measures.hpp"

using namespace sgkernel;

namespace {

SystemSpec load_spec(const std::string& path) {
  if (path == "-") return parse_system_spec(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return parse_system_spec(in);
}

void print_system(std::ostream& out, const ColorSystem& cs, bool machine) {
  if (machine) {
    out << "n " << cs.n << "\n";
    out << "colors " << cs.colors.size() << "\n";
    for (std::size_t i = 0; i < cs.colors.size(); ++i)
      out << "color " << i + 1 << " " << cs.colors[i].to_string() << " weight "
          << format_rational(cs.weights[i]) << "\n";
  } else {
    out << "system: n = " << cs.n << "\n";
    for (std::size_t i = 0; i < cs.colors.size(); ++i)
      out << "  color " << i + 1 << ": " << cs.colors[i].to_string() << "  weight "
          << format_rational(cs.weights[i]) << "\n";
  }
}

void print_matrix_block(std::ostream& out, const std::string& name, const RatMat& m,
                        const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels, bool machine) {
  if (machine) {
    out << "matrix " << name << " rows " << m.rows() << " cols " << m.cols() << "\n";
    out << print_matrix(m);
  } else {
    out << name << ":\n" << format_labeled_matrix(m, row_labels, col_labels) << "\n";
  }
}

struct Analysis {
  ColorSystem cs;
  SemigroupTable st;
  KernelStructure ks;
};

Analysis analyze(const SystemSpec& spec) {
  ColorSystem cs = to_color_system(spec);
  SemigroupTable st = generate_semigroup(cs, spec.cap);
  KernelStructure ks = kernel_of(st);
  return Analysis{std::move(cs), std::move(st), std::move(ks)};
}

std::string partition_text(const std::vector<std::vector<int>>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ' ';
    out += print_subset(blocks[i]);
  }
  return out;
}

void cmd_hierarchy(const SystemSpec& spec, int level, bool augmented, bool oracle,
                   bool operators, bool machine, std::ostream& out) {
  ColorSystem cs = to_color_system(spec);
  if (machine)
    out << "command hierarchy\nlevel " << level << "\naugmented " << (augmented ? 1 : 0) << "\n";
  else
    out << "level " << level << (augmented ? " (augmented)" : "") << "\n";
  print_system(out, cs, machine);
  std::vector<std::string> labels = level_labels(cs.n, level, augmented);
  std::vector<std::string> plain = level_labels(cs.n, level, false);
  for (std::size_t i = 0; i < cs.colors.size(); ++i) {
    RatMat m = augmented ? augmented_level_matrix(cs.colors[i], level)
                         : level_matrix(cs.colors[i], level);
    print_matrix_block(out, "level_matrix color " + std::to_string(i + 1), m, labels, labels,
                       machine);
    if (oracle && !augmented) {
      RatMat p = level_matrix_via_permanents(cs.colors[i], level);
      print_matrix_block(out, "permanent_oracle color " + std::to_string(i + 1), p, plain, plain,
                         machine);
      out << (machine ? "oracle_agreement " : "oracle agreement: ") << (p == m ? "true" : "false")
          << "\n";
    }
  }
  if (operators) {
    std::vector<std::string> lower = level_labels(cs.n, level - 1, false);
    print_matrix_block(out,
                       "inclusion_operator " + std::to_string(level) + " " +
                           std::to_string(level - 1),
                       inclusion_operator(cs.n, level, level - 1), plain, lower, machine);
    if (2 * level <= cs.n) {
      std::vector<std::string> co = level_labels(cs.n, cs.n - level, false);
      print_matrix_block(out, "inclusion_inverse " + std::to_string(level),
                         inclusion_inverse(cs.n, level), co, plain, machine);
    }
  }
}

void cmd_kernel(const SystemSpec& spec, bool machine, std::ostream& out) {
  Analysis a = analyze(spec);
  if (machine) out << "command kernel\n";
  print_system(out, a.cs, machine);
  const auto& ks = a.ks;
  if (machine) {
    out << "semigroup.size " << a.st.size() << "\n";
    out << "kernel.rank " << ks.rank() << "\n";
    out << "kernel.size " << ks.size() << "\n";
    out << "kernel.partitions " << ks.partitions().size() << "\n";
    for (std::size_t x = 0; x < ks.partitions().size(); ++x)
      out << "partition " << x + 1 << " " << partition_text(ks.partitions()[x]) << "\n";
    out << "kernel.ranges " << ks.ranges().size() << "\n";
    for (std::size_t y = 0; y < ks.ranges().size(); ++y)
      out << "range " << y + 1 << " " << print_subset(ks.ranges()[y]) << "\n";
    out << "group.order " << ks.group_order() << "\n";
    for (std::size_t x = 0; x < ks.partitions().size(); ++x)
      for (std::size_t y = 0; y < ks.ranges().size(); ++y)
        out << "idempotent " << x + 1 << " " << y + 1 << " "
            << ks.element(ks.cell_idempotent(static_cast<int>(x), static_cast<int>(y)))
                   .to_string()
            << "\n";
    out << "base.idempotent " << ks.element(ks.base_idempotent()).to_string() << "\n";
    for (std::size_t y = 0; y < ks.ranges().size(); ++y) {
      out << "sandwich " << y + 1;
      for (std::size_t x = 0; x < ks.partitions().size(); ++x)
        out << " "
            << ks.element(
                     ks.group_elements()[sandwich(ks, static_cast<int>(y), static_cast<int>(x))])
                   .to_string();
      out << "\n";
    }
  } else {
    out << "semigroup size: " << a.st.size() << "\n";
    out << "kernel: rank " << ks.rank() << ", " << ks.size() << " elements, "
        << ks.partitions().size() << " partitions, " << ks.ranges().size()
        << " ranges, local group order " << ks.group_order() << "\n\n";
    out << "idempotent table (rows: partitions, columns: ranges):\n";
    std::vector<std::size_t> width(ks.ranges().size());
    std::size_t label_width = 0;
    for (const auto& p : ks.partitions())
      label_width = std::max(label_width, partition_text(p).size());
    for (std::size_t y = 0; y < ks.ranges().size(); ++y)
      width[y] =
          std::max(print_subset(ks.ranges()[y]).size(),
                   ks.element(ks.cell_idempotent(0, static_cast<int>(y))).to_string().size());
    out << std::string(label_width, ' ');
    for (std::size_t y = 0; y < ks.ranges().size(); ++y) {
      std::string h = print_subset(ks.ranges()[y]);
      out << "  " << std::string(width[y] - h.size(), ' ') << h;
    }
    out << "\n";
    for (std::size_t x = 0; x < ks.partitions().size(); ++x) {
      std::string label = partition_text(ks.partitions()[x]);
      out << label << std::string(label_width - label.size(), ' ');
      for (std::size_t y = 0; y < ks.ranges().size(); ++y) {
        std::string cell =
            ks.element(ks.cell_idempotent(static_cast<int>(x), static_cast<int>(y))).to_string();
        out << "  " << std::string(width[y] - cell.size(), ' ') << cell;
      }
      out << "\n";
    }
    out << "\nbase idempotent: " << ks.element(ks.base_idempotent()).to_string() << "\n";
    out << "local group at the base idempotent:";
    for (int k : ks.group_elements()) out << " " << ks.element(k).to_string();
    out << "\n";
  }
}

void cmd_limits(const SystemSpec& spec, bool machine, std::ostream& out) {
  Analysis a = analyze(spec);
  Measure lambda = limit_measure_exact(a.cs, a.st, a.ks);
  LimitFactorization fact = factorize_lambda(lambda, a.ks);
  if (machine) out << "command limits\n";
  print_system(out, a.cs, machine);
  if (machine) {
    out << "kernel.size " << a.ks.size() << "\n";
    for (int k = 0; k < a.ks.size(); ++k)
      out << "lambda " << a.ks.element(k).to_string() << " "
          << format_rational(lambda.at(a.ks.semigroup_ids()[k])) << "\n";
    out << "alpha " << print_vector(fact.alpha) << "\n";
    out << "beta " << print_vector(fact.beta) << "\n";
    out << "group.order " << fact.group_order << "\n";
  } else {
    out << "limit measure on the kernel (" << a.ks.size() << " elements):\n";
    for (int k = 0; k < a.ks.size(); ++k)
      out << "  " << a.ks.element(k).to_string() << "  "
          << format_rational(lambda.at(a.ks.semigroup_ids()[k])) << "\n";
    out << "alpha over partitions: " << print_vector(fact.alpha) << "\n";
    out << "beta over ranges: " << print_vector(fact.beta) << "\n";
    out << "local group order: " << fact.group_order << "\n";
  }
}

void cmd_fields(const SystemSpec& spec, bool machine, std::ostream& out) {
  Analysis a = analyze(spec);
  Measure lambda = limit_measure_exact(a.cs, a.st, a.ks);
  std::vector<int> levels = spec.levels;
  if (levels.empty())
    for (int l = 1; l <= a.ks.rank(); ++l) levels.push_back(l);
  if (machine) out << "command fields\n";
  print_system(out, a.cs, machine);
  if (machine) out << "kernel.rank " << a.ks.rank() << "\n";
  for (int level : levels) {
    Field pi = pi_field(a.ks, lambda, level);
    Field u = u_field(a.ks, lambda, level);
    if (machine) {
      out << "pi.raw " << level << " " << print_vector(pi.raw) << "\n";
      out << "pi.normalized " << level << " " << print_vector(pi.normalized()) << "\n";
      out << "u.raw " << level << " " << print_vector(u.raw) << "\n";
      out << "u.normalized " << level << " " << print_vector(u.normalized()) << "\n";
    } else {
      out << "level " << level << ":\n";
      out << "  pi raw:        " << print_vector(pi.raw) << "\n";
      out << "  pi normalized: " << print_vector(pi.normalized()) << "\n";
      out << "  u raw:         " << print_vector(u.raw) << "\n";
      out << "  u normalized:  " << print_vector(u.normalized()) << "\n";
    }
  }
}

void cmd_rank(const SystemSpec& spec, bool machine, std::ostream& out) {
  Analysis a = analyze(spec);
  Measure lambda = limit_measure_exact(a.cs, a.st, a.ks);
  Field pi = stationary(a.cs);
  Field u2 = u_field(a.ks, lambda, 2);
  std::vector<Rational> witness = pi.raw * kk_average(u2);
  int r = detect_rank(pi.raw, u2);
  if (machine) {
    out << "command rank\n";
    print_system(out, a.cs, machine);
    out << "pi " << print_vector(pi.raw) << "\n";
    out << "witness " << print_vector(witness) << "\n";
    out << "rank " << r << "\n";
    out << "structural.rank " << a.ks.rank() << "\n";
  } else {
    print_system(out, a.cs, machine);
    out << "stationary pi: " << print_vector(pi.raw) << "\n";
    out << "witness pi <KK^T>: " << print_vector(witness) << "\n";
    out << "kernel rank: " << r << " (structural: " << a.ks.rank() << ")\n";
  }
}

void cmd_rightgroup(const SystemSpec& spec, bool machine, std::ostream& out) {
  Analysis a = analyze(spec);
  Measure lambda = limit_measure_exact(a.cs, a.st, a.ks);
  Field u2 = u_field(a.ks, lambda, 2);
  RightGroupResult res = right_group_test(u2);
  if (machine) {
    out << "command rightgroup\n";
    print_system(out, a.cs, machine);
    out << "u2 " << print_vector(u2.normalized()) << "\n";
    out << "rightgroup " << (res.is_right_group ? "true" : "false") << "\n";
    if (res.is_right_group) out << "partition " << partition_text(res.partition) << "\n";
    out << "structural " << (structural_right_group(a.ks) ? "true" : "false") << "\n";
  } else {
    print_system(out, a.cs, machine);
    out << "u2: " << print_vector(u2.normalized()) << "\n";
    out << "right group: " << (res.is_right_group ? "true" : "false") << "\n";
    if (res.is_right_group) out << "partition: " << partition_text(res.partition) << "\n";
  }
}

void cmd_construct(const std::string& which, const std::string& red, const std::string& blue,
                   bool machine, std::ostream& out) {
  std::vector<int> rimg = parse_oneline(red);
  std::vector<int> bimg = parse_oneline(blue);
  int m = static_cast<int>(rimg.size());
  Transformation r = from_oneline(rimg, m);
  Transformation b = from_oneline(bimg, m);
  ColorSystem cs = which == "a" ? split_with_loop(r, b) : split_no_loop(r, b);
  ClassificationReport rep = classify_rank_n_minus_1(cs);
  const char* case_name = rep.kind == SplitCase::WithLoop ? "a"
                          : rep.kind == SplitCase::NoLoop ? "b"
                                                          : "neither";
  if (machine) {
    out << "command construct\n";
    print_system(out, cs, machine);
    out << "case " << case_name << "\n";
    out << "kernel.rank " << rep.kernel_rank << "\n";
    out << "q " << format_rational(rep.q) << "\n";
    out << "pi " << print_vector(rep.pi) << "\n";
    out << "beta " << print_vector(rep.beta) << "\n";
    out << "range 1 " << print_subset(rep.ranges[0]) << "\n";
    out << "range 2 " << print_subset(rep.ranges[1]) << "\n";
    out << "u2 " << print_vector(rep.u2) << "\n";
  } else {
    out << "construction: " << (which == "a" ? "with-loop" : "no-loop") << " splitting\n";
    print_system(out, cs, machine);
    out << "classification: case " << case_name << ", kernel rank " << rep.kernel_rank << "\n";
    out << "q: " << format_rational(rep.q) << "\n";
    out << "stationary pi: " << print_vector(rep.pi) << "\n";
    out << "beta: " << print_vector(rep.beta) << "\n";
    out << "ranges: " << print_subset(rep.ranges[0]) << " " << print_subset(rep.ranges[1])
        << "\n";
    out << "u2: " << print_vector(rep.u2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact kernel analysis of transformation semigroups from edge-colored digraphs"};
  app.require_subcommand(1);

  std::string input = "-";
  bool machine = false;
  int level = 2;
  std::vector<int> field_levels;
  bool augmented = false, oracle = false, operators = false;
  std::size_t cap = kDefaultClosureCap;
  std::string which_case, red, blue;

  auto add_common = [&](CLI::App* sub, bool takes_input = true) {
    if (takes_input) sub->add_option("input", input, "input document path ('-' for stdin)");
    sub->add_flag("--machine", machine, "machine-readable output");
    sub->add_option("--cap", cap, "closure element cap");
  };

  CLI::App* hierarchy = app.add_subcommand("hierarchy", "level matrices of each color");
  add_common(hierarchy);
  hierarchy->add_option("--level", level, "subset level")->check(CLI::PositiveNumber);
  hierarchy->add_flag("--augmented", augmented, "adjoin the collapsed state");
  hierarchy->add_flag("--oracle", oracle, "also compute via permanents");
  hierarchy->add_flag("--operators", operators, "print inclusion operators");

  CLI::App* kernel = app.add_subcommand("kernel", "kernel structure and idempotent table");
  add_common(kernel);
  CLI::App* limits = app.add_subcommand("limits", "exact limit measure and its factors");
  add_common(limits);
  CLI::App* fields = app.add_subcommand("fields", "pi and u fields per level");
  add_common(fields);
  fields->add_option("--level", field_levels, "levels to report (repeatable)");
  CLI::App* rank = app.add_subcommand("rank", "kernel rank from pi and u2");
  add_common(rank);
  CLI::App* rightgroup = app.add_subcommand("rightgroup", "right-group test from u2");
  add_common(rightgroup);

  CLI::App* construct = app.add_subcommand("construct", "splitting constructions");
  construct->add_option("--case", which_case, "a (with loop) or b (no loop)")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  construct->add_option("--red", red, "red permutation, e.g. [162345]")->required();
  construct->add_option("--blue", blue, "blue permutation")->required();
  add_common(construct, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream out;
    if (hierarchy->parsed()) {
      cmd_hierarchy(load_spec(input), level, augmented, oracle, operators, machine, out);
    } else {
      SystemSpec s;
      if (!construct->parsed()) {
        s = load_spec(input);
        s.cap = cap;
      }
      if (kernel->parsed()) cmd_kernel(s, machine, out);
      else if (limits->parsed()) cmd_limits(s, machine, out);
      else if (fields->parsed()) {
        if (!field_levels.empty()) s.levels = field_levels;
        cmd_fields(s, machine, out);
      }
      else if (rank->parsed()) cmd_rank(s, machine, out);
      else if (rightgroup->parsed()) cmd_rightgroup(s, machine, out);
      else if (construct->parsed()) cmd_construct(which_case, red, blue, machine, out);
    }
    std::cout << out.str();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
