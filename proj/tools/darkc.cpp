#include <charconv>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "darkc/acceptance.hpp"
#include "darkc/dark.hpp"
#include "darkc/energy.hpp"
#include "darkc/serialize.hpp"

using namespace darkc;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out(1);
  for (char ch : text) {
    if (ch == sep)
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

int parse_int(const std::string& token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) throw invalid_input("not an integer: '" + token + "'");
  return v;
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) w.push_back(parse_int(tok));
  return w;
}

/// "1 2 1 ; 0 ; " -> three words; an absent flag means identity everywhere.
std::vector<ReducedWord> parse_words(const std::string& text, std::size_t p, const char* flag) {
  if (text.empty()) return std::vector<ReducedWord>(p);
  const auto parts = split(text, ';');
  if (parts.size() != p)
    throw invalid_input(std::string(flag) + " has " + std::to_string(parts.size()) + " words, expected " +
                        std::to_string(p));
  std::vector<ReducedWord> out;
  for (const auto& s : parts) out.push_back(parse_word(s));
  return out;
}

struct SpecFlags {
  int n = 0;
  std::vector<int> lambda;
  std::vector<int> r;
  std::string w;
  std::string v;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "rank n of A_n^(1)")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--lambda", lambda, "column counts, weakly decreasing")->required()->delimiter(',');
    cmd->add_option("--r", r, "row counts (default: all 1)")->delimiter(',');
    cmd->add_option("--w", w, "reduced words below y_r, separated by ';'");
    cmd->add_option("--v", v, "classical prefixes, separated by ';'");
  }

  DarkSpec spec() const {
    DarkSpec s{n, lambda, r.empty() ? std::vector<int>(lambda.size(), 1) : r, {}};
    const auto ws = parse_words(w, lambda.size(), "--w");
    const auto vs = parse_words(v, lambda.size(), "--v");
    for (std::size_t j = 0; j < lambda.size(); ++j) s.words.push_back({vs[j], ws[j]});
    return s;
  }
};

std::string word_text(const ReducedWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::to_string(w[k]);
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"DARK crystals of type A_n^(1) and their Demazure character identity"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.fallthrough();

  SpecFlags build_flags, char_flags, verify_flags, export_flags;
  auto* build_cmd = app.add_subcommand("build", "construct the DARK set");
  build_flags.attach(build_cmd);

  auto* char_cmd = app.add_subcommand("char", "character of one side as JSON");
  char_flags.attach(char_cmd);
  std::string side = "lhs";
  char_cmd->add_option("--side", side, "lhs or rhs")->check(CLI::IsMember({"lhs", "rhs"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the character identity");
  verify_flags.attach(verify_cmd);

  auto* export_cmd = app.add_subcommand("export", "crystal graph of the DARK set");
  export_flags.attach(export_cmd);
  bool dot = false;
  export_cmd->add_flag("--dot", dot, "Graphviz output instead of JSON");

  auto* weyl_cmd = app.add_subcommand("weyl", "extended affine Weyl group tools");
  weyl_cmd->require_subcommand(1);
  weyl_cmd->fallthrough();
  auto* factor_cmd = weyl_cmd->add_subcommand("factor", "t_{w0(varpi_r)} = y tau");
  int wn = 0, wr = 0;
  factor_cmd->add_option("--n", wn)->required()->check(CLI::PositiveNumber);
  factor_cmd->add_option("--r", wr)->required();

  auto* energy_cmd = app.add_subcommand("energy", "energy D of a tensor product element");
  int en = 0;
  std::vector<std::string> factor_labels;
  std::string elt;
  energy_cmd->add_option("--n", en)->required()->check(CLI::PositiveNumber);
  energy_cmd->add_option("--factors", factor_labels, "r1xs1,r2xs2,...")->required()->delimiter(',');
  energy_cmd->add_option("--elt", elt, "tableaux separated by '|'")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*build_cmd) {
    const auto set = build(build_flags.spec());
    if (as_json) {
      std::cout << to_json(set).dump(2) << "\n";
    } else {
      const int m = set.factors.front().cartan().size();
      std::cout << set.elements.size() << " elements\n";
      for (const auto& x : set.elements) std::cout << tensor_text(x, m) << "\n";
    }
    return 0;
  }
  if (*char_cmd) {
    const auto spec = char_flags.spec();
    CharPoly f;
    if (side == "rhs") {
      f = rhs_character(spec);
    } else {
      EnergyCache cache{CartanA(spec.n)};
      f = lhs_character(spec, build(spec), cache);
    }
    std::cout << to_json(f).dump(as_json ? 2 : -1) << "\n";
    return 0;
  }
  if (*verify_cmd) {
    const auto v = verify(verify_flags.spec());
    if (as_json) {
      std::cout << json{{"ok", v.ok}, {"C", v.C ? json(to_string(*v.C)) : json(nullptr)}, {"diff", v.diff}}.dump(2)
                << "\n";
    } else if (v.ok) {
      std::cout << "OK C=" << to_string(*v.C) << "\n";
    } else {
      std::cout << "FAIL\n";
    }
    if (!v.ok)
      for (const auto& line : v.diff) std::cerr << line << "\n";
    return v.ok ? 0 : 1;
  }
  if (*export_cmd) {
    const auto set = build(export_flags.spec());
    if (dot)
      std::cout << graph_dot(set);
    else
      std::cout << graph_json(set).dump(2) << "\n";
    return 0;
  }
  if (*factor_cmd) {
    const CartanA c(wn);
    const auto data = kr_translation_data(c, wr);
    const auto word = reduced_word(data.y);
    if (as_json)
      std::cout << json{{"y", word}, {"tau", data.k}}.dump() << "\n";
    else
      std::cout << "y=[" << word_text(word) << "] tau=rot+" << data.k << "\n";
    return 0;
  }
  if (*energy_cmd) {
    const CartanA c(en);
    std::vector<KRCrystal> factors;
    for (const auto& label : factor_labels) {
      const auto rs = split(label, 'x');
      if (rs.size() != 2) throw invalid_input("factor '" + label + "' is not of the form RxS");
      factors.emplace_back(c, parse_int(rs[0]), parse_int(rs[1]));
    }
    const auto x = parse_tensor(elt, factors);
    EnergyCache cache(c);
    const auto d = total_D(cache, factors, x);
    if (as_json) {
      json terms = json::array();
      for (const auto& t : d.terms) terms.push_back(json{{"i", t.i + 1}, {"j", t.j + 1}, {"H", t.h}});
      std::cout << json{{"D", d.total}, {"terms", terms}}.dump(2) << "\n";
    } else {
      std::cout << "D=" << d.total << "\n";
      for (const auto& t : d.terms) std::cout << "H(" << t.i + 1 << "," << t.j + 1 << ")=" << t.h << "\n";
    }
    return 0;
  }
  if (*selftest_cmd) return acceptance::run_selftest(std::cout) ? 0 : 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
