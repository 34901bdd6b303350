#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ordcopies/cube_set.hpp"
#include "ordcopies/error.hpp"
#include "ordcopies/fin_poset.hpp"
#include "ordcopies/forcing_expr.hpp"
#include "ordcopies/layered_set.hpp"
#include "ordcopies/serialization.hpp"
#include "ordcopies/verify.hpp"

namespace ordcopies::cli {

namespace {

// Thrown for problems with the invocation itself (missing files and the like).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

using Action = std::function<void(std::ostream& out, std::ostream& err)>;

struct Inputs {
  std::vector<std::string> ordinals;
  std::vector<std::string> files;
  std::string point;
  std::string index;
  std::string alpha;
  std::string s_file;
  std::uint64_t m = 0;
  std::size_t max_size = 0;
  std::string format = "text";
  bool iterate = false;
  std::string suite;
  std::uint64_t seed = verify::kDefaultSeed;
};

class Commands {
 public:
  explicit Commands(CLI::App& app) : app_(app), limits_(Limits::from_env()) {
    app_.require_subcommand(1);
    add_ord();
    add_set();
    add_layer();
    add_poset();
    add_factorize();
    add_verify();
  }

  const Action& action() const { return action_; }

 private:
  CLI::App* leaf(CLI::App* group, const std::string& name, const std::string& help, Action a) {
    auto* sub = group->add_subcommand(name, help);
    sub->callback([this, a, sub] {
      auto it = file_count_.find(sub);
      if (it == file_count_.end()) {
        action_ = a;
        return;
      }
      action_ = [this, a, n = it->second](std::ostream& out, std::ostream& err) {
        need_files(n);
        a(out, err);
      };
    });
    return sub;
  }

  void need_files(std::size_t n) const {
    if (in_.files.size() != n)
      throw UsageError("expected " + std::to_string(n) + " --file argument(s), got " + std::to_string(in_.files.size()));
  }

  Ordinal ord(std::size_t i) const { return Ordinal::parse(in_.ordinals.at(i)); }
  CubeSet cube() const {
    return cube_set_from_json(parse_json(read_file(in_.files.at(0))), limits_);
  }
  LayeredSet layered(std::size_t i) const {
    return layered_set_from_json(parse_json(read_file(in_.files.at(i))), limits_);
  }
  FinPoset poset(std::size_t i) const { return FinPoset::parse(read_file(in_.files.at(i))); }

  void binary_ord(CLI::App* group, const std::string& name, const std::string& help,
                  std::function<Ordinal(const Ordinal&, const Ordinal&)> f) {
    leaf(group, name, help, [this, f](std::ostream& out, std::ostream&) {
          out << f(ord(0), ord(1)).to_string() << '\n';
        })->add_option("operands", in_.ordinals, "two ordinals")->required()->expected(2);
  }

  void add_ord() {
    auto* g = app_.add_subcommand("ord", "ordinal arithmetic below epsilon_0");
    g->require_subcommand(1);
    binary_ord(g, "add", "a + b", [](const Ordinal& a, const Ordinal& b) { return a + b; });
    binary_ord(g, "mul", "a * b", [](const Ordinal& a, const Ordinal& b) { return a * b; });
    binary_ord(g, "pow", "a ^ b", [](const Ordinal& a, const Ordinal& b) { return power(a, b); });
    leaf(g, "cmp", "compare a with b: LT, EQ or GT", [this](std::ostream& out, std::ostream&) {
      out << to_string(compare(ord(0), ord(1))) << '\n';
    })->add_option("operands", in_.ordinals, "two ordinals")->required()->expected(2);
    leaf(g, "classify", "zero, successor or limit; indecomposability", [this](std::ostream& out, std::ostream&) {
      Ordinal a = ord(0);
      out << "kind: " << (a.is_zero() ? "zero" : a.is_successor() ? "successor" : "limit") << '\n';
      if (!a.is_zero()) out << "indecomposable: " << yes_no(is_indecomposable(a)) << '\n';
      if (a.is_limit() || a.is_successor()) {
        Ordinal w = a.without_finite_part();
        if (!w.is_zero()) out << "leading_exponent: " << w.leading_exponent().to_string() << '\n';
      }
    })->add_option("alpha", in_.ordinals, "ordinal")->required()->expected(1);
  }

  void add_set() {
    auto* g = app_.add_subcommand("set", "subsets of w^n given as JSON files");
    g->require_subcommand(1);
    auto file = [this](CLI::App* sub) {
      sub->add_option("--file", in_.files, "CubeSet JSON")->required();
      file_count_[sub] = 1;
      return sub;
    };
    file(leaf(g, "member", "is the point in the set", [this](std::ostream& out, std::ostream&) {
      CubeSet a = cube();
      Point p = point_from_json(parse_json(in_.point));
      if (p.size() != a.dim())
        throw DomainError("point has " + std::to_string(p.size()) + " coordinates, set has dimension " +
                          std::to_string(a.dim()));
      out << yes_no(a.contains(p)) << '\n';
    }))->add_option("--point", in_.point, "point as a JSON array")->required();
    file(leaf(g, "type", "order type under the lexicographic order", [this](std::ostream& out, std::ostream&) {
      out << order_type(cube()).to_string() << '\n';
    }));
    file(leaf(g, "ideal", "membership in the ideal of sets of type below w^n", [this](std::ostream& out, std::ostream&) {
      out << yes_no(!fubini_positive(cube())) << '\n';
    }));
    file(leaf(g, "select", "the xi-th point of the set", [this](std::ostream& out, std::ostream&) {
      out << to_json(select(cube(), Ordinal::parse(in_.index))).dump() << '\n';
    }))->add_option("--index", in_.index, "ordinal xi")->required();
    file(leaf(g, "copy", "does the set have order type alpha", [this](std::ostream& out, std::ostream&) {
      out << yes_no(is_copy(cube(), Ordinal::parse(in_.alpha))) << '\n';
    }))->add_option("--alpha", in_.alpha, "ordinal alpha")->required();
  }

  void add_layer() {
    auto* g = app_.add_subcommand("layer", "subsets of w^w given as JSON files");
    g->require_subcommand(1);
    auto one = [this](CLI::App* sub) {
      sub->add_option("--file", in_.files, "LayeredSet JSON")->required();
      file_count_[sub] = 1;
      return sub;
    };
    one(leaf(g, "sset", "the columns with more than m-th level mass", [this](std::ostream& out, std::ostream&) {
      out << to_json(s_set(layered(0), in_.m)).dump() << '\n';
    }))->add_option("--m", in_.m, "level")->required();
    one(leaf(g, "supp", "columns that meet the set", [this](std::ostream& out, std::ostream&) {
      out << to_json(support(layered(0))).dump() << '\n';
    }));
    one(leaf(g, "ideal", "membership in the ideal", [this](std::ostream& out, std::ostream&) {
      out << yes_no(in_ideal(layered(0))) << '\n';
    }));
    one(leaf(g, "type", "order type", [this](std::ostream& out, std::ostream&) {
      out << order_type(layered(0)).to_string() << '\n';
    }));
    auto* subset = leaf(g, "subset", "A is a subset of B modulo the ideal", [this](std::ostream& out, std::ostream&) {
      out << yes_no(subset_mod_ideal(layered(0), layered(1))) << '\n';
    });
    subset->add_option("--file", in_.files, "A then B")->required();
    file_count_[subset] = 2;
    auto* fusion_cmd = leaf(g, "fusion", "fuse A_0 .. A_r along S", [this](std::ostream& out, std::ostream&) {
      std::vector<LayeredSet> as;
      for (std::size_t i = 0; i < in_.files.size(); ++i) as.push_back(layered(i));
      NatSet s = nat_set_from_json(parse_json(read_file(in_.s_file)));
      out << to_json(fusion(as, s)).dump() << '\n';
    });
    fusion_cmd->add_option("--file", in_.files, "A_0 .. A_r in order")->required();
    fusion_cmd->add_option("--s", in_.s_file, "index set S as NatSet JSON")->required();
  }

  void add_poset() {
    auto* g = app_.add_subcommand("poset", "finite pre-orders in the adjacency text format");
    g->require_subcommand(1);
    auto one = [this](CLI::App* sub) {
      sub->add_option("--file", in_.files, "pre-order")->required();
      file_count_[sub] = 1;
      return sub;
    };
    auto two = [this](CLI::App* sub) {
      sub->add_option("--file", in_.files, "P then Q")->required();
      file_count_[sub] = 2;
      return sub;
    };
    one(leaf(g, "sm", "separative modification", [this](std::ostream& out, std::ostream&) {
      out << separative_modification(poset(0)).to_text();
    }));
    one(leaf(g, "sq", "separative quotient", [this](std::ostream& out, std::ostream&) {
      out << separative_quotient(poset(0)).to_text();
    }));
    one(leaf(g, "sep", "is the pre-order separative", [this](std::ostream& out, std::ostream&) {
      out << yes_no(is_separative(poset(0))) << '\n';
    }));
    two(leaf(g, "product", "coordinatewise product; (i, j) is i*|Q| + j", [this](std::ostream& out, std::ostream&) {
      out << product(poset(0), poset(1)).to_text();
    }));
    in_.max_size = kDefaultIsoCap;
    two(leaf(g, "iso", "an isomorphism as a JSON array, or none", [this](std::ostream& out, std::ostream&) {
      auto m = find_isomorphism(poset(0), poset(1), in_.max_size);
      if (m)
        out << nlohmann::json(*m).dump() << '\n';
      else
        out << "none\n";
    }))->add_option("--max-size", in_.max_size, "largest size searched");
  }

  void add_factorize() {
    auto* sub = leaf(&app_, "factorize", "factor sq<P(alpha), inclusion> into standard pieces",
                     [this](std::ostream& out, std::ostream&) {
                       Ordinal a = ord(0);
                       ExprPtr e = in_.iterate ? iteration_form(a) : factorize(a);
                       RenderFormat f = in_.format == "json"    ? RenderFormat::Json
                                        : in_.format == "latex" ? RenderFormat::Latex
                                                                : RenderFormat::Text;
                       out << render(e, f) << '\n';
                     });
    sub->add_option("alpha", in_.ordinals, "ordinal")->required()->expected(1);
    sub->add_flag("--iterate", in_.iterate, "two-step iteration form");
    sub->add_option("--format", in_.format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  }

  void add_verify() {
    auto* sub = leaf(&app_, "verify", "run the property suites", [this](std::ostream& out, std::ostream& err) {
      std::vector<std::string> names;
      for (const auto& s : verify::suites())
        if (in_.suite.empty() || s.name == in_.suite) names.emplace_back(s.name);
      if (names.empty()) throw UsageError("unknown suite \"" + in_.suite + "\"");
      bool all = true;
      for (const auto& name : names) {
        auto r = verify::run_suite(name, in_.seed);
        all &= r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << " [" << r.cases << " cases, "
            << std::fixed << std::setprecision(2) << r.seconds << "s]\n";
        if (r.time_limit > 0 && r.seconds >= r.time_limit)
          err << r.name << ": exceeded " << r.time_limit << "s\n";
        for (const auto& f : r.failures) err << r.name << ": " << f << '\n';
      }
      if (!all) throw DomainError("property suites failed");
    });
    sub->add_option("--suite", in_.suite, "run only this suite");
    sub->add_option("--seed", in_.seed, "random seed");
  }

  CLI::App& app_;
  Limits limits_;
  Inputs in_;
  std::map<const CLI::App*, std::size_t> file_count_;
  Action action_;
};

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  CommandResult r;
  std::ostringstream out, err;
  try {
    CLI::App app("Exact computation with countable ordinals and their ideals", "ordcopies");
    Commands commands(app);
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      r.exit_code = code == 0 ? 0 : 2;
      r.out = out.str();
      r.err = err.str();
      return r;
    }
    commands.action()(out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    r.exit_code = 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    r.exit_code = 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    r.exit_code = 1;
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace ordcopies::cli
