#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jcouple/coupling.hpp"
#include "jcouple/kepler.hpp"
#include "jcouple/particles.hpp"
#include "jcouple/wigner.hpp"
#include "output.hpp"
#include "verify.hpp"

namespace jcouple::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::optional<Format> requested;
  bool quiet = false;

  Format format(std::initializer_list<Format> supported, const std::string& command) const {
    const Format f = requested.value_or(*supported.begin());
    if (std::find(supported.begin(), supported.end(), f) == supported.end()) {
      throw UsageError(command + " does not support --format " + format_name(f));
    }
    return f;
  }
};

using Action = std::function<void(Context&)>;

struct Command {
  CLI::App* app;
  Action action;
};

HalfInt halfint_arg(const std::string& text) { return parse_halfint(text); }

void write_surd(const Surd& value, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json:
      out << surd_json(value).dump() << '\n';
      break;
    case Format::Csv:
      out << "sign,num,den,approx\n"
          << csv_row({std::to_string(value.sign()), to_string(numerator_of(value.radicand())),
                      to_string(denominator_of(value.radicand())), approx_text(value.to_double())})
          << '\n';
      break;
    default:
      out << value.to_string() << '\n';
  }
}

struct SixArgs {
  std::string a, b, c, d, e, f;
};

void add_six(CLI::App* sub, SixArgs& o, const std::array<const char*, 6>& names) {
  std::string* slots[] = {&o.a, &o.b, &o.c, &o.d, &o.e, &o.f};
  for (std::size_t i = 0; i < 6; ++i) sub->add_option(names[i], *slots[i])->required();
}

Command add_cg(CLI::App& app) {
  auto o = std::make_shared<SixArgs>();
  auto* sub = app.add_subcommand("cg", "Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m>");
  add_six(sub, *o, {"--j1", "--m1", "--j2", "--m2", "--j", "--m"});
  return {sub, [o](Context& c) {
            const CgArgs args{halfint_arg(o->a), halfint_arg(o->b), halfint_arg(o->c),
                              halfint_arg(o->d), halfint_arg(o->e), halfint_arg(o->f)};
            write_surd(cg(args), c.format({Format::Json, Format::Csv, Format::Plain}, "cg"), c.out);
          }};
}

ThreeJArgs three_j_args(const SixArgs& o) {
  return {halfint_arg(o.a), halfint_arg(o.b), halfint_arg(o.c), halfint_arg(o.d), halfint_arg(o.e), halfint_arg(o.f)};
}

Command add_threej(CLI::App& app) {
  auto o = std::make_shared<SixArgs>();
  auto phase = std::make_shared<std::string>("standard");
  auto* sub = app.add_subcommand("threej", "Wigner 3j symbol (j1 j2 j3; m1 m2 m3)");
  add_six(sub, *o, {"--j1", "--m1", "--j2", "--m2", "--j3", "--m3"});
  sub->add_option("--phase", *phase, "standard: (-1)^(j1-j2-m3); plus-m: (-1)^(j1-j2+m3)")
      ->check(CLI::IsMember({"standard", "plus-m"}));
  return {sub, [o, phase](Context& c) {
            const auto p = *phase == "plus-m" ? ThreeJPhase::PlusM : ThreeJPhase::Standard;
            write_surd(three_j(three_j_args(*o), p), c.format({Format::Json, Format::Csv, Format::Plain}, "threej"),
                       c.out);
          }};
}

Command add_regge_audit(CLI::App& app) {
  auto o = std::make_shared<SixArgs>();
  auto* sub = app.add_subcommand("regge-audit", "Audit the permutation/transposition orbit of a Regge symbol");
  add_six(sub, *o, {"--j1", "--m1", "--j2", "--m2", "--j3", "--m3"});
  return {sub, [o](Context& c) {
            const Format f = c.format({Format::Json, Format::Csv, Format::Plain}, "regge-audit");
            const ThreeJArgs args = three_j_args(*o);
            const RSymbol r = regge_symbol(args);
            const auto entries = regge_orbit_audit(args);
            if (f == Format::Json) {
              Json doc;
              doc["input"] = halfint_list_json({args.j1, args.m1, args.j2, args.m2, args.j3, args.m3});
              Json rows = Json::array();
              for (const auto& row : r.entries()) rows.push_back(Json(row));
              doc["r_symbol"] = std::move(rows);
              doc["magic_sum"] = r.magic_sum();
              doc["value"] = surd_json(three_j(args));
              Json list = Json::array();
              for (const auto& e : entries) {
                Json item;
                item["transform"] = e.transform;
                item["claimed"] = e.claimed;
                item["actual"] = surd_json(e.actual);
                item["verdict"] = e.agrees ? "agree" : "diverge";
                list.push_back(std::move(item));
              }
              doc["entries"] = std::move(list);
              c.out << doc.dump() << '\n';
            } else if (f == Format::Csv) {
              c.out << "transform,claimed,actual,verdict\n";
              for (const auto& e : entries) {
                c.out << csv_row({e.transform, std::to_string(e.claimed), e.actual.to_string(),
                                  e.agrees ? "agree" : "diverge"})
                      << '\n';
              }
            } else {
              c.out << "value " << three_j(args).to_string() << "\nR";
              for (const auto& row : r.entries()) c.out << " [" << row[0] << ' ' << row[1] << ' ' << row[2] << ']';
              c.out << '\n';
              for (const auto& e : entries) {
                c.out << (e.agrees ? "agree  " : "diverge") << ' ' << e.transform << " claimed " << e.claimed
                      << " actual " << e.actual.to_string() << '\n';
              }
            }
          }};
}

struct CoupleOpts {
  std::string js, j, intermediates, m;
};

Command add_couple(CLI::App& app) {
  auto o = std::make_shared<CoupleOpts>();
  auto* sub = app.add_subcommand("couple", "Sequential coupling chains and their coupled-state expansions");
  sub->add_option("--js", o->js, "comma-separated momenta, e.g. 1/2,1,1/2")->required();
  sub->add_option("--j", o->j, "total angular momentum");
  sub->add_option("--intermediates", o->intermediates, "comma-separated j12, j123, ...");
  sub->add_option("--m", o->m, "total projection; expands each chain when given");
  return {sub, [o](Context& c) {
            const Format f = c.format({Format::Json, Format::Csv, Format::Plain}, "couple");
            const auto js = parse_halfint_list(o->js);
            std::optional<HalfInt> total;
            if (!o->j.empty()) total = halfint_arg(o->j);
            std::vector<CouplingChain> chains;
            if (js.size() == 1) {
              if (!total || *total == js[0]) chains.emplace_back(js, std::vector<HalfInt>{}, js[0]);
            } else {
              chains = enumerate_chains(js, total);
            }
            if (!o->intermediates.empty()) {
              const auto wanted = parse_halfint_list(o->intermediates);
              std::erase_if(chains, [&](const CouplingChain& ch) { return ch.intermediates() != wanted; });
            }
            if (chains.empty()) throw DomainError("no coupling chain matches the requested values");

            if (o->m.empty()) {
              if (f == Format::Json) {
                Json arr = Json::array();
                for (const auto& ch : chains) arr.push_back(chain_json(ch));
                c.out << arr.dump() << '\n';
              } else if (f == Format::Csv) {
                c.out << "js,intermediates,j\n";
                for (const auto& ch : chains) {
                  c.out << csv_row({join_halfints(ch.js(), ";"), join_halfints(ch.intermediates(), ";"),
                                    ch.total_j().to_string()})
                        << '\n';
                }
              } else {
                for (const auto& ch : chains) c.out << ch.to_string() << '\n';
              }
              return;
            }

            const HalfInt m = halfint_arg(o->m);
            std::erase_if(chains, [&](const CouplingChain& ch) {
              return abs(m) > ch.total_j() || (ch.total_j() - m).is_half_odd();
            });
            if (chains.empty()) throw DomainError("no matching chain admits m=" + m.to_string());
            if (f == Format::Csv) c.out << "chain,m,ms,sign,num,den,approx\n";
            Json arr = Json::array();
            for (const auto& ch : chains) {
              const StateExpansion e = expand_coupled_state(ch, m);
              Json terms = Json::array();
              for (const auto& [ms, amp] : e.amplitudes) {
                if (amp.is_zero()) continue;
                if (f == Format::Csv) {
                  c.out << csv_row({ch.to_string(), m.to_string(), join_halfints(ms, ";"), std::to_string(amp.sign()),
                                    to_string(numerator_of(amp.radicand())), to_string(denominator_of(amp.radicand())),
                                    approx_text(amp.to_double())})
                        << '\n';
                } else if (f == Format::Plain) {
                  c.out << ch.to_string() << " m=" << m.to_string() << "  (" << join_halfints(ms, ", ")
                        << ") " << amp.to_string() << '\n';
                } else {
                  Json t;
                  t["ms"] = halfint_list_json(ms);
                  t["amp"] = surd_json(amp);
                  terms.push_back(std::move(t));
                }
              }
              if (f == Format::Json) {
                Json doc;
                doc["chain"] = chain_json(ch);
                doc["m"] = m.to_string();
                doc["terms"] = std::move(terms);
                arr.push_back(std::move(doc));
              }
            }
            if (f == Format::Json) c.out << arr.dump() << '\n';
          }};
}

std::uint64_t tree_limit(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("JCOUPLE_MAX_TREES"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("JCOUPLE_MAX_TREES must be a nonnegative integer, got '") + env + "'");
    }
  }
  return kDefaultMaxTrees;
}

struct SchemesOpts {
  std::size_t n = 0;
  bool count_only = false;
  std::optional<std::uint64_t> max_trees;
};

Command add_schemes(CLI::App& app) {
  auto o = std::make_shared<SchemesOpts>();
  auto* sub = app.add_subcommand("schemes", "Enumerate the (2n-3)!! coupling trees of n momenta");
  sub->add_option("--n", o->n, "number of momenta")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  sub->add_flag("--count-only", o->count_only, "print only the number of schemes");
  sub->add_option("--max-trees", o->max_trees, "enumeration guard (default 34459425, or JCOUPLE_MAX_TREES)");
  return {sub, [o](Context& c) {
            const Format f = c.format({Format::Json, Format::Csv, Format::Plain}, "schemes");
            if (o->count_only) {
              c.out << coupling_scheme_count(o->n) << '\n';
              return;
            }
            const std::uint64_t limit = tree_limit(o->max_trees);
            if (f == Format::Csv) c.out << "index,scheme\n";
            Json arr = Json::array();
            std::uint64_t index = 0;
            for_each_coupling_tree(
                o->n,
                [&](const CouplingTree& t) {
                  ++index;
                  if (f == Format::Json) {
                    arr.push_back(t.canonical());
                  } else if (f == Format::Csv) {
                    c.out << index << ',' << csv_field(t.canonical()) << '\n';
                  } else {
                    c.out << t.canonical() << '\n';
                  }
                },
                limit);
            if (f == Format::Json) c.out << arr.dump() << '\n';
          }};
}

// Reads "((1,2),3)" and returns its canonical text and leaf count.
class SchemeParser {
 public:
  explicit SchemeParser(std::string text) : text_(std::move(text)) {}

  std::pair<std::string, std::size_t> parse() {
    const auto [canonical, min_leaf] = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing text");
    std::sort(leaves_.begin(), leaves_.end());
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      if (leaves_[i] != static_cast<int>(i) + 1) fail("leaves must be exactly 1..n, each once");
    }
    (void)min_leaf;
    return {canonical, leaves_.size()};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("bad scheme '" + text_ + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::pair<std::string, int> node() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      auto a = node();
      expect(',');
      auto b = node();
      expect(')');
      if (b.second < a.second) std::swap(a, b);
      return {"(" + a.first + "," + b.first + ")", a.second};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a leaf number or '('");
    const int leaf = std::stoi(text_.substr(start, pos_ - start));
    leaves_.push_back(leaf);
    return {std::to_string(leaf), leaf};
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::vector<int> leaves_;
};

struct DiagramOpts {
  std::size_t n = 0;
  std::string scheme;
  std::string labels;
  std::optional<std::uint64_t> max_trees;
};

Command add_diagram(CLI::App& app) {
  auto o = std::make_shared<DiagramOpts>();
  auto* sub = app.add_subcommand("diagram", "Clebsch-Gordan diagram of a coupling scheme as DOT");
  auto* n_opt = sub->add_option("--n", o->n, "number of momenta (sequential scheme)")
                    ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  auto* s_opt = sub->add_option("--scheme", o->scheme, "scheme such as ((1,3),2)");
  n_opt->excludes(s_opt);
  sub->add_option("--labels", o->labels, "comma-separated momentum labels (default 1..n)");
  sub->add_option("--max-trees", o->max_trees, "enumeration guard for --scheme lookups");
  return {sub, [o](Context& c) {
            const Format f = c.format({Format::Dot, Format::Json, Format::Plain}, "diagram");
            std::optional<CouplingTree> tree;
            if (!o->scheme.empty()) {
              const auto [canonical, n] = SchemeParser(o->scheme).parse();
              if (n == 1) {
                tree = CouplingTree::sequential(1);
              } else {
                for_each_coupling_tree(
                    n,
                    [&](const CouplingTree& t) {
                      if (!tree && t.canonical() == canonical) tree = t;
                    },
                    tree_limit(o->max_trees));
              }
            } else if (o->n > 0) {
              tree = CouplingTree::sequential(o->n);
            } else {
              throw UsageError("diagram needs --n or --scheme");
            }
            std::vector<std::string> labels;
            if (o->labels.empty()) {
              for (std::size_t k = 1; k <= tree->leaf_count(); ++k) labels.push_back(std::to_string(k));
            } else {
              std::stringstream ss(o->labels);
              for (std::string item; std::getline(ss, item, ',');) labels.push_back(item);
            }
            const std::string dot = export_dot(*tree, labels);
            if (f == Format::Dot) {
              c.out << dot;
            } else if (f == Format::Json) {
              Json doc;
              doc["scheme"] = tree->canonical();
              doc["dot"] = dot;
              c.out << doc.dump() << '\n';
            } else {
              c.out << tree->canonical() << '\n';
            }
          }};
}

struct VerifyOpts {
  std::string prop;
  std::string grid = "n=2,jmax=1";
};

Command add_verify(CLI::App& app) {
  auto o = std::make_shared<VerifyOpts>();
  auto* sub = app.add_subcommand("verify", "Audit a proposition over a grid, one verdict per input");
  sub->add_option("--prop", o->prop, "univalence, compat, first-sym, second-sym or kramers")
      ->required()
      ->check(CLI::IsMember({"univalence", "compat", "first-sym", "second-sym", "kramers"}));
  sub->add_option("--grid", o->grid, "n=<count>,jmax=<j>[,interp=same-state|paper-literal]");
  return {sub, [o](Context& c) {
            const Format f = c.format({Format::Json, Format::Csv, Format::Plain}, "verify");
            const GridOptions grid = parse_grid(o->grid);
            const VerifySummary s = run_verify(o->prop, grid, f, c.out);
            if (!c.quiet) {
              c.err << "verify " << o->prop << " (n=" << grid.n << ", jmax=" << grid.jmax.to_string() << "): " << s.agree
                    << " agree, " << s.diverge << " diverge\n";
            }
          }};
}

ParticleTree particle_from_json(const Json& j) {
  if (j.is_number_integer()) return ParticleTree::leaf(j.get<int>());
  if (j.is_array()) {
    std::vector<ParticleTree> kids;
    for (const auto& child : j) kids.push_back(particle_from_json(child));
    return ParticleTree::node(std::move(kids));
  }
  throw DomainError("a particle is +1, -1 or a nonempty array of particles, got " + j.dump());
}

Command add_classify(CLI::App& app) {
  auto text = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("classify", "Boson/fermion classification of a composite particle");
  sub->add_option("particle", *text, "nested JSON array of +1 (boson) and -1 (fermion), e.g. [[-1,-1,-1],-1]")
      ->required();
  return {sub, [text](Context& c) {
            const Format f = c.format({Format::Json, Format::Csv, Format::Plain}, "classify");
            Json parsed;
            try {
              parsed = Json::parse(*text);
            } catch (const Json::parse_error& e) {
              throw DomainError(std::string("particle description is not JSON: ") + e.what());
            }
            const bool fermion = is_fermion(particle_from_json(parsed));
            if (f == Format::Json) {
              Json doc;
              doc["fermion"] = fermion;
              c.out << doc.dump() << '\n';
            } else if (f == Format::Csv) {
              c.out << "fermion\n" << (fermion ? "true" : "false") << '\n';
            } else {
              c.out << (fermion ? "fermion" : "boson") << '\n';
            }
          }};
}

struct KeplerOpts {
  int z = 0;
  std::string jcut;
  std::string stats = "boson";
};

Command add_kepler(CLI::App& app) {
  auto o = std::make_shared<KeplerOpts>();
  auto* sub = app.add_subcommand("kepler", "Energy levels and degeneracies of Z particles in a Kepler field");
  sub->add_option("--z", o->z, "number of particles")->required();
  sub->add_option("--jcut", o->jcut, "largest j per particle")->required();
  sub->add_option("--stats", o->stats, "boson (spin 0) or fermion (spin 1/2)")
      ->check(CLI::IsMember({"boson", "fermion"}));
  return {sub, [o](Context& c) {
            const Format f = c.format({Format::Json, Format::Csv, Format::Plain}, "kepler");
            const Statistics stats = o->stats == "fermion" ? Statistics::FermionHalf : Statistics::Boson0;
            const Spectrum s = spectrum(o->z, halfint_arg(o->jcut), stats);
            const std::string kramers = to_string(s.kramers);
            if (f == Format::Json) {
              Json doc;
              doc["z"] = s.z;
              doc["j_cut"] = s.j_cut.to_string();
              doc["statistics"] = to_string(s.statistics);
              doc["kramers"] = kramers;
              Json levels = Json::array();
              for (const auto& l : s.levels) {
                Json item;
                item["js"] = halfint_list_json(l.js);
                item["energy"] = rational_json(l.energy);
                item["deg_paper"] = l.degeneracy_paper;
                item["deg_enum"] = l.degeneracy_enumerated;
                item["divergent"] = !l.degeneracies_agree();
                levels.push_back(std::move(item));
              }
              doc["levels"] = std::move(levels);
              Json merged = Json::array();
              for (const auto& m : s.merged) {
                Json item;
                item["energy"] = rational_json(m.energy);
                item["deg_paper"] = m.degeneracy_paper;
                item["deg_enum"] = m.degeneracy_enumerated;
                item["tuples"] = m.tuples;
                merged.push_back(std::move(item));
              }
              doc["merged"] = std::move(merged);
              c.out << doc.dump() << '\n';
            } else if (f == Format::Csv) {
              c.out << "j_tuple,energy_num,energy_den,deg_paper,deg_enum,kramers\n";
              for (const auto& l : s.levels) {
                c.out << csv_row({join_halfints(l.js, ";"), to_string(numerator_of(l.energy)),
                                  to_string(denominator_of(l.energy)), std::to_string(l.degeneracy_paper),
                                  std::to_string(l.degeneracy_enumerated), kramers})
                      << '\n';
              }
            } else {
              c.out << "Z=" << s.z << " j_cut=" << s.j_cut.to_string() << ' ' << to_string(s.statistics)
                    << " kramers=" << kramers << '\n';
              for (const auto& l : s.levels) {
                c.out << '(' << join_halfints(l.js, ", ") << ")  E=" << to_string(l.energy)
                      << "  deg_paper=" << l.degeneracy_paper << "  deg_enum=" << l.degeneracy_enumerated
                      << (l.degeneracies_agree() ? "" : "  divergent") << '\n';
              }
            }
          }};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact angular-momentum coupling: Clebsch-Gordan and 3j values, coupling schemes, "
               "time-reversal audits and the Kepler example",
               "jcouple"};
  std::string format_text;
  bool quiet = false;
  auto* format_opt = app.add_option("--format", format_text, "json (default), csv, plain or dot")
                         ->check(CLI::IsMember({"json", "csv", "plain", "dot"}));
  app.add_flag("--quiet", quiet, "suppress the summary written to the error stream");
  app.require_subcommand(1);

  std::vector<Command> commands{add_cg(app),      add_threej(app),  add_regge_audit(app),
                                add_couple(app),  add_schemes(app), add_diagram(app),
                                add_verify(app),  add_classify(app), add_kepler(app)};
  for (auto& cmd : commands) cmd.app->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and friends
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  Context ctx{buffer, err, std::nullopt, quiet};
  try {
    if (format_opt->count() > 0) ctx.requested = parse_format(format_text);
    for (auto& cmd : commands) {
      if (cmd.app->parsed()) cmd.action(ctx);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace jcouple::cli
