#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggt/cayley.hpp"
#include "ggt/cli.hpp"
#include "ggt/error.hpp"
#include "ggt/hyperbolic.hpp"
#include "ggt/schreier.hpp"

namespace ggt::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string fmt(Rational const& r) {
  return r.denominator() == 1
             ? std::to_string(r.numerator())
             : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(Rational const& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void write_text(std::string const& path, std::string const& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) {
    throw Error("cannot write '" + path + "'");
  }
  f << text;
}

// shared group / ball options
struct GroupArgs {
  std::string group;
  std::size_t radius = 0;
  std::size_t budget = 5'000'000;
  bool json = false;
  bool csv = false;
};

void add_group_args(CLI::App* cmd, GroupArgs& a, bool with_csv) {
  cmd->add_option("--group,-g", a.group, "group spec")->required();
  cmd->add_option("--radius,-r", a.radius, "ball radius")->required();
  cmd->add_option("--budget", a.budget, "maximum number of ball elements");
  auto* json = cmd->add_flag("--json", a.json, "JSON output");
  if (with_csv) {
    auto* csv = cmd->add_flag("--csv", a.csv, "CSV output");
    json->excludes(csv);
  }
}

Json growth_report(std::string const& name, GrowthSeries const& s) {
  Json j;
  j["group"] = name;
  std::vector<std::size_t> radii;
  for (std::size_t n = 0; n <= s.max_radius(); ++n) {
    radii.push_back(n);
  }
  j["radii"] = radii;
  j["sizes"] = s.sizes;
  j["sphere_sizes"] = s.sphere_sizes();
  if (s.max_radius() >= 4) {
    auto e = growth_exponent(s);
    j["gamma_estimate"] = e.root;
    j["degree_estimate"] = growth_degree(s);
    j["gamma_fekete"] = e.fekete;
    j["gamma_sphere_ratio"] = e.sphere_ratio;
  } else {
    j["gamma_estimate"] = nullptr;
    j["degree_estimate"] = nullptr;
  }
  // |∂B(n)| = s(n+1), available for n < N
  Json ratios = Json::array();
  for (std::size_t n = 1; n < s.max_radius(); ++n) {
    Rational r(static_cast<std::int64_t>(s.sizes[n + 1] - s.sizes[n]),
               static_cast<std::int64_t>(s.sizes[n]));
    ratios.push_back({r.numerator(), r.denominator()});
  }
  j["folner_ratios"] = ratios;
  return j;
}

void print_growth(std::string const& name, GrowthSeries const& s, bool json, bool csv,
                  std::ostream& out) {
  if (json) {
    out << growth_report(name, s).dump() << '\n';
    return;
  }
  auto spheres = s.sphere_sizes();
  if (csv) {
    out << "radius,size,sphere\n";
    for (std::size_t n = 0; n <= s.max_radius(); ++n) {
      out << n << ',' << s.sizes[n] << ',' << spheres[n] << '\n';
    }
    return;
  }
  out << "group " << name << '\n' << "radius size sphere\n";
  for (std::size_t n = 0; n <= s.max_radius(); ++n) {
    out << n << ' ' << s.sizes[n] << ' ' << spheres[n] << '\n';
  }
  if (s.max_radius() >= 4) {
    auto e = growth_exponent(s);
    out << "gamma_estimate " << fmt(e.root) << '\n'
        << "gamma_fekete " << fmt(e.fekete) << '\n'
        << "gamma_sphere_ratio " << fmt(e.sphere_ratio) << '\n'
        << "degree_estimate " << fmt(growth_degree(s)) << '\n';
  }
}

Word parse_word(Alphabet const& alphabet, std::string const& text) {
  return alphabet.parse(text);
}

std::vector<std::string> split_list(std::string const& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// x=(12)(45);y=(2354)
std::pair<Alphabet, std::vector<Permutation>> parse_action(std::string const& spec) {
  std::vector<std::string> names;
  std::vector<Permutation> perms;
  std::size_t degree = 0;
  for (auto const& item : split_list(spec, ';')) {
    if (item.empty()) {
      continue;
    }
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("bad action \"" + spec + "\": expected <gen>=(cycles);…");
    }
    names.push_back(item.substr(0, eq));
    perms.push_back(Permutation::parse_cycles(item.substr(eq + 1)));
    degree = std::max(degree, perms.back().degree());
  }
  if (perms.empty()) {
    throw ParseError("bad action \"" + spec + "\": no generators");
  }
  for (auto& p : perms) {
    p = p.padded(degree);
  }
  return {Alphabet(std::move(names)), std::move(perms)};
}

////////////////////////////////////////////////////////////////////////
// schreier
////////////////////////////////////////////////////////////////////////

struct SchreierArgs {
  std::string action;
  std::string regular;
  std::string table;
  std::size_t basepoint = 1;
  std::string presentation;
  std::string transversal;
  std::string rewrite_word;
  std::string dot;
};

void run_schreier(SchreierArgs const& a, std::ostream& out) {
  std::optional<CosetTable> table;
  if (!a.table.empty()) {
    table = CosetTable::load(a.table);
  } else if (!a.regular.empty()) {
    auto [alphabet, perms] = parse_action(a.regular);
    table = CosetTable::regular(alphabet, perms);
  } else if (!a.action.empty()) {
    if (a.basepoint == 0) {
      throw Error("basepoint is 1-based");
    }
    auto [alphabet, perms] = parse_action(a.action);
    table = CosetTable::from_action(alphabet, perms, a.basepoint - 1);
  } else {
    throw Error("schreier needs one of --action, --regular or --table");
  }
  Alphabet const& gens = table->generators();
  Transversal t;
  if (a.transversal.empty()) {
    t = transversal(*table);
  } else {
    std::vector<Word> words;
    for (auto const& w : split_list(a.transversal, ',')) {
      words.push_back(parse_word(gens, w));
    }
    t = transversal_from_words(*table, words);
  }
  auto sg = schreier_generators(*table, t);

  out << table->to_string();
  out << "transversal:\n";
  for (std::size_t c = 0; c < t.size(); ++c) {
    out << "  " << c << ' ' << gens.format(t[c]) << '\n';
  }
  out << "schreier generators:\n";
  for (auto const& g : sg) {
    out << "  " << g.symbol << " = " << gens.format(g.value) << "  (coset " << g.coset
        << ", " << gens.name(g.gen) << ")\n";
  }
  if (!a.presentation.empty()) {
    auto pres = Presentation::load(a.presentation);
    auto sub = subgroup_presentation(pres, *table, t);
    out << "rewritten relators:\n" << sub.raw.to_string();
    out << "simplified:\n" << sub.simplified.to_string();
  }
  if (!a.rewrite_word.empty()) {
    Word w = parse_word(gens, a.rewrite_word);
    std::vector<std::string> names;
    for (auto const& g : sg) {
      names.push_back(g.symbol);
    }
    Word r = rewrite(w, *table, sg);
    out << "rewrite " << gens.format(w) << " = "
        << (names.empty() ? std::string("1") : Alphabet(names).format(r)) << '\n';
  }
  if (!a.dot.empty()) {
    write_text(a.dot, table->to_dot(), out);
  }
}

////////////////////////////////////////////////////////////////////////
// dehn
////////////////////////////////////////////////////////////////////////

struct DehnArgs {
  std::string presentation;
  std::string word;
  bool trace = false;
  bool area = false;
  std::size_t max_n = 2;
  std::size_t max_conj = 3;
  std::size_t random = 0;
  std::uint64_t seed = 0;
};

void run_dehn(DehnArgs const& a, bool have_random, std::ostream& out) {
  auto pres = Presentation::load(a.presentation);
  auto const& gens = pres.generators;
  Word w;
  if (have_random) {
    w = random_trivial_word(pres, a.random, a.max_conj, a.seed);
    out << "word " << gens.format(w) << '\n';
  } else if (!a.word.empty()) {
    w = parse_word(gens, a.word);
  } else {
    throw Error("dehn needs --word or --random");
  }
  auto trace = dehn_reduce(w, pres);
  if (a.trace) {
    for (auto const& s : trace.steps) {
      out << "pos=" << s.position << " match=" << gens.format(s.matched)
          << " replace=" << gens.format(s.replacement) << " -> " << gens.format(s.after)
          << '\n';
    }
  }
  out << "terminal " << gens.format(trace.terminal) << '\n';
  out << "trivial " << (trace.trivial() ? "yes" : "no") << '\n';
  if (a.area) {
    auto area = area_bruteforce(w, pres, a.max_n, a.max_conj);
    if (area) {
      out << "area " << *area << '\n';
    } else {
      out << "area not found within max-n=" << a.max_n << " max-conj=" << a.max_conj
          << '\n';
    }
  }
}

////////////////////////////////////////////////////////////////////////
// h2
////////////////////////////////////////////////////////////////////////

bool is_integer(std::string const& s) {
  if (s.empty()) {
    return false;
  }
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

void run_classify(std::vector<std::string> const& entries, std::ostream& out) {
  if (entries.size() != 4) {
    throw Error("classify needs four entries a b c d");
  }
  bool exact = true;
  for (auto const& e : entries) {
    exact = exact && is_integer(e);
  }
  h2::Isometry kind;
  double tau;
  std::string trace;
  if (exact) {
    IntMatrix m(2);
    for (std::size_t i = 0; i < 4; ++i) {
      m(i / 2, i % 2) = BigInt(entries[i]);
    }
    kind = h2::classify(m);
    tau = h2::translation_length(m);
    trace = m.trace().str();
  } else {
    double v[4];
    for (std::size_t i = 0; i < 4; ++i) {
      v[i] = h2::parse_complex(entries[i]).real();
    }
    h2::Moebius g{v[0], v[1], v[2], v[3]};
    kind = h2::classify(g);
    tau = h2::translation_length(g);
    trace = fmt(g.trace());
  }
  out << h2::to_string(kind) << " trace=" << trace << " translation_length=" << fmt(tau)
      << '\n';
}

////////////////////////////////////////////////////////////////////////
// grig
////////////////////////////////////////////////////////////////////////

std::string grig_text(std::string const& w) { return w.empty() ? "1" : w; }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algorithms of geometric group theory on finite balls", "ggt"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  GroupArgs growth_a, cayley_a, folner_a, ends_a, delta_a;
  auto* growth = app.add_subcommand("growth", "growth series ρ(0..N)");
  add_group_args(growth, growth_a, true);

  auto* cayley = app.add_subcommand("cayley", "elements of a Cayley ball");
  add_group_args(cayley, cayley_a, false);
  std::string cayley_dot;
  cayley->add_option("--dot", cayley_dot, "write the ball as DOT ('-' for stdout)");

  auto* folner = app.add_subcommand("folner", "Følner ratios |∂B(n)|/|B(n)|");
  add_group_args(folner, folner_a, false);

  auto* ends = app.add_subcommand("ends", "components of Ball(R)∖Ball(r) reaching the sphere");
  add_group_args(ends, ends_a, false);
  std::vector<std::size_t> cores;
  ends->add_option("--core", cores, "core radii (default 0..R-1)")->delimiter(',');

  auto* delta = app.add_subcommand("delta", "four-point δ estimate on a ball");
  add_group_args(delta, delta_a, false);
  std::uint64_t delta_samples = 0;
  std::uint64_t seed = 0;
  delta->add_option("--samples", delta_samples, "random triples (0 = exhaustive)");
  delta->add_option("--seed", seed, "random seed");

  SchreierArgs sch_a;
  auto* schreier = app.add_subcommand("schreier", "coset tables and Reidemeister–Schreier");
  auto* sch_action = schreier->add_option("--action", sch_a.action,
                                          "permutation action, e.g. x=(12)(45);y=(2354)");
  auto* sch_regular = schreier->add_option("--regular", sch_a.regular,
                                           "regular action of a permutation group");
  auto* sch_table = schreier->add_option("--table", sch_a.table, "coset table file");
  sch_action->excludes(sch_regular)->excludes(sch_table);
  sch_regular->excludes(sch_table);
  schreier->add_option("--basepoint", sch_a.basepoint, "1-based basepoint for --action");
  schreier->add_option("--presentation", sch_a.presentation, "presentation file of G");
  schreier->add_option("--transversal", sch_a.transversal, "comma-separated words");
  schreier->add_option("--rewrite", sch_a.rewrite_word, "word of H to rewrite");
  schreier->add_option("--dot", sch_a.dot, "write the Schreier graph as DOT");

  DehnArgs dehn_a;
  auto* dehn = app.add_subcommand("dehn", "Dehn's algorithm and combinatorial area");
  dehn->add_option("--presentation", dehn_a.presentation, "presentation file")->required();
  auto* dehn_word = dehn->add_option("--word", dehn_a.word, "word to reduce");
  auto* dehn_random = dehn->add_option("--random", dehn_a.random,
                                       "use a random product of N relator conjugates");
  dehn_word->excludes(dehn_random);
  dehn->add_flag("--trace", dehn_a.trace, "print each reduction step");
  dehn->add_flag("--area", dehn_a.area, "search for the combinatorial area");
  dehn->add_option("--max-n", dehn_a.max_n, "area search: most conjugates");
  dehn->add_option("--max-conj", dehn_a.max_conj, "longest conjugator");
  dehn->add_option("--seed", dehn_a.seed, "random seed");

  auto* grig = app.add_subcommand("grig", "the Grigorchuk group");
  grig->require_subcommand(1);
  std::string grig_word;
  std::size_t grig_n = 0;
  bool grig_json = false;
  auto* grig_wp = grig->add_subcommand("wp", "word problem");
  grig_wp->add_option("word", grig_word)->required();
  auto* grig_order = grig->add_subcommand("order", "order of an element");
  grig_order->add_option("word", grig_word)->required();
  auto* grig_split = grig->add_subcommand("split", "φ(w) = (w_l, w_r)");
  grig_split->add_option("word", grig_word)->required();
  auto* grig_growth = grig->add_subcommand("growth", "growth series");
  grig_growth->add_option("N", grig_n)->required();
  grig_growth->add_flag("--json", grig_json);
  auto* grig_level = grig->add_subcommand("level", "action on level k");
  grig_level->add_option("word", grig_word)->required();
  grig_level->add_option("k", grig_n)->required();

  auto* h2cmd = app.add_subcommand("h2", "the hyperbolic plane");
  h2cmd->require_subcommand(1);
  std::vector<std::string> pts;
  std::size_t samples = 256;
  long k = 0;
  std::size_t max_len = 10;
  auto* h2_dist = h2cmd->add_subcommand("dist", "hyperbolic distance");
  h2_dist->add_option("points", pts)->expected(2)->required();
  auto* h2_classify = h2cmd->add_subcommand("classify", "classify [[a,b],[c,d]]");
  h2_classify->add_option("entries", pts)->expected(4)->required();
  auto* h2_geodesic = h2cmd->add_subcommand("geodesic", "geodesic through two points");
  h2_geodesic->add_option("points", pts)->expected(2)->required();
  auto* h2_thin = h2cmd->add_subcommand("thin", "thinness of a geodesic triangle");
  h2_thin->add_option("points", pts)->expected(3)->required();
  h2_thin->add_option("--samples", samples, "sample points per side");
  auto* h2_ping = h2cmd->add_subcommand("pingpong", "freeness certificate in SL(2,Z)");
  h2_ping->add_option("k", k)->required();
  h2_ping->add_option("--max-len", max_len, "longest word checked");
  h2_ping->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    auto with_group = [&](GroupArgs const& a, auto&& body) {
      auto oracle = parse_group_spec(a.group);
      std::visit([&](auto const& o) { body(o); }, oracle);
    };

    if (growth->parsed()) {
      with_group(growth_a, [&](auto const& o) {
        print_growth(o.name(), growth_series(o, growth_a.radius, growth_a.budget),
                     growth_a.json, growth_a.csv, out);
      });
    } else if (cayley->parsed()) {
      with_group(cayley_a, [&](auto const& o) {
        auto b = ball(o, cayley_a.radius, {cayley_a.budget, !cayley_dot.empty()});
        auto gens = o.generators();
        if (cayley_a.json) {
          Json j;
          j["group"] = o.name();
          j["radius"] = cayley_a.radius;
          Json elems = Json::array();
          for (std::size_t i = 0; i < b.size(); ++i) {
            elems.push_back({{"witness", b.witness_text(i, gens)}, {"dist", b[i].distance}});
          }
          j["elements"] = elems;
          out << j.dump() << '\n';
        } else if (cayley_dot != "-") {
          out << "group " << o.name() << " radius " << cayley_a.radius << " size "
              << b.size() << '\n';
          for (std::size_t i = 0; i < b.size(); ++i) {
            out << b[i].distance << ' ' << b.witness_text(i, gens) << '\n';
          }
        }
        if (!cayley_dot.empty()) {
          write_text(cayley_dot, to_dot(o, b), out);
        }
      });
    } else if (folner->parsed()) {
      with_group(folner_a, [&](auto const& o) {
        auto ratios = folner_ratios(o, folner_a.radius, folner_a.budget);
        if (folner_a.json) {
          Json j;
          j["group"] = o.name();
          Json rs = Json::array();
          for (auto const& r : ratios) {
            rs.push_back({r.numerator(), r.denominator()});
          }
          j["folner_ratios"] = rs;
          out << j.dump() << '\n';
          return;
        }
        out << "n ratio value\n";
        for (std::size_t n = 0; n < ratios.size(); ++n) {
          out << n + 1 << ' ' << fmt(ratios[n]) << ' ' << fmt(to_double(ratios[n])) << '\n';
        }
      });
    } else if (ends->parsed()) {
      if (cores.empty()) {
        for (std::size_t r = 0; r < ends_a.radius; ++r) {
          cores.push_back(r);
        }
      }
      with_group(ends_a, [&](auto const& o) {
        auto p = ends_profile(o, ends_a.radius, cores, ends_a.budget);
        if (ends_a.json) {
          Json j;
          j["group"] = o.name();
          j["radius"] = p.radius;
          j["counts"] = p.counts;
          out << j.dump() << '\n';
          return;
        }
        out << "core components\n";
        for (auto [r, c] : p.counts) {
          out << r << ' ' << c << '\n';
        }
      });
    } else if (delta->parsed()) {
      with_group(delta_a, [&](auto const& o) {
        DeltaMode mode = Exhaustive{};
        if (delta_samples > 0) {
          mode = Sampled{seed, delta_samples};
        }
        auto d = delta_four_point(o, delta_a.radius, mode, delta_a.budget);
        if (delta_a.json) {
          Json j;
          j["group"] = o.name();
          j["radius"] = delta_a.radius;
          j["delta"] = {d.delta.numerator(), d.delta.denominator()};
          j["sample"] = d.sample;
          j["triples"] = d.triples;
          out << j.dump() << '\n';
          return;
        }
        out << "delta " << fmt(d.delta) << '\n'
            << "sample " << d.sample << '\n'
            << "triples " << d.triples << '\n';
      });
    } else if (schreier->parsed()) {
      run_schreier(sch_a, out);
    } else if (dehn->parsed()) {
      run_dehn(dehn_a, dehn_random->count() > 0, out);
    } else if (grig->parsed()) {
      if (grig_wp->parsed()) {
        out << (grig::is_trivial(grig_word) ? "trivial" : "nontrivial") << '\n';
      } else if (grig_order->parsed()) {
        out << grig::order(grig_word) << '\n';
      } else if (grig_split->parsed()) {
        auto [l, r] = grig::split(grig_word);
        out << '(' << grig_text(l) << ", " << grig_text(r) << ")\n";
      } else if (grig_growth->parsed()) {
        grig::Oracle o;
        print_growth(o.name(), growth_series(o, grig_n), grig_json, false, out);
      } else if (grig_level->parsed()) {
        auto p = grig::level_action(grig_word, grig_n);
        for (std::size_t x = 0; x < p.degree(); ++x) {
          out << (x ? " " : "") << p[x];
        }
        out << '\n';
      }
    } else if (h2cmd->parsed()) {
      if (h2_dist->parsed()) {
        out << fmt(h2::distance(h2::parse_complex(pts[0]), h2::parse_complex(pts[1])))
            << '\n';
      } else if (h2_classify->parsed()) {
        run_classify(pts, out);
      } else if (h2_geodesic->parsed()) {
        out << h2::to_string(
                   h2::geodesic_between(h2::parse_complex(pts[0]), h2::parse_complex(pts[1])))
            << '\n';
      } else if (h2_thin->parsed()) {
        double v = h2::thin_triangle_check(h2::parse_complex(pts[0]),
                                           h2::parse_complex(pts[1]),
                                           h2::parse_complex(pts[2]), samples);
        out << "max_deviation " << fmt(v) << '\n'
            << "bound " << fmt(h2::thin_triangle_delta()) << '\n';
      } else if (h2_ping->parsed()) {
        auto r = pingpong_certificate(k, max_len, seed);
        out << "table " << (r.table_ok ? "ok" : "fails") << '\n'
            << "words_checked " << r.words_checked << '\n';
        if (r.witness) {
          out << "relation " << *r.witness << " = " << r.witness_value->to_string() << '\n';
        } else {
          out << (r.free() ? "free" : "no relation found") << '\n';
        }
      }
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ggt::cli
