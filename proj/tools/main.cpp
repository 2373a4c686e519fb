// main.cpp -- command line front end: normalize, equiv, attrs, rankers,
// dfa, oracle, bench

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simonk/attributes.hpp"
#include "simonk/normalizer.hpp"
#include "simonk/oracle.hpp"
#include "simonk/ranker.hpp"
#include "simonk/subword_dfa.hpp"
#include "simonk/word.hpp"

namespace {

using namespace simonk;

Alphabet alphabet_for(const std::string& order,
                      std::initializer_list<const std::string*> inputs) {
  if (order.empty()) {
    std::string all;
    for (const std::string* w : inputs) all += *w;
    return Alphabet::occurring_in(all);
  }
  const Alphabet alpha(order);
  for (const std::string* w : inputs) {
    for (const char c : *w) {
      if (!alpha.contains(c)) {
        throw std::invalid_argument("letter '" + std::string(1, c) +
                                    "' is not covered by --order");
      }
    }
  }
  return alpha;
}

void print_attribute_rows(const Word& w, const std::vector<Attribute>& attrs) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::cout << (i + 1) << '\t' << w.symbols()[i] << '\t' << attrs[i].x
              << '\t' << attrs[i].y << '\n';
  }
}

template <typename Range>
std::string join(const Range& values, char sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

int run_normalize(std::uint64_t k, const std::string& order, bool with_attrs,
                  bool use_stdin, const std::string& word_arg) {
  const auto emit = [&](const std::string& text) {
    const Alphabet alpha = alphabet_for(order, {&text});
    const NormalForm nf = shortlex_normal_form(Word(text, alpha), k);
    std::cout << nf.word.symbols() << '\n';
    if (with_attrs) print_attribute_rows(nf.word, nf.attributes);
  };
  if (use_stdin) {
    std::string line;
    while (std::getline(std::cin, line)) emit(line);
  } else {
    emit(word_arg);
  }
  return 0;
}

int run_equiv(std::uint64_t k, const std::string& order, bool witness,
              bool force, const std::string& us, const std::string& vs) {
  const Alphabet alpha = alphabet_for(order, {&us, &vs});
  const Word u(us, alpha);
  const Word v(vs, alpha);
  if (equivalent(u, v, k)) {
    std::cout << "EQUIV\n";
    return 0;
  }
  std::cout << "DISTINCT\n";
  if (witness) {
    try {
      const auto w = distinguishing_subword(u, v, k, kDefaultSetGuard, force);
      std::cout << "witness\t" << w.value().symbols() << '\n';
    } catch (const GuardExceeded& e) {
      std::cerr << "witness suppressed: " << e.what() << '\n';
    }
  }
  return 1;
}

int run_attrs(bool marked, std::uint64_t k, const std::string& order,
              const std::string& ws) {
  const Alphabet alpha = alphabet_for(order, {&ws});
  const Word u(ws, alpha);
  if (!marked) {
    print_attribute_rows(u, attributes(u));
    return 0;
  }
  const AnnotatedWord aw = y_coordinates_with_deletion(u, x_coordinates(u, k), k);
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::cout << (i + 1) << '\t' << u.symbols()[i] << '\t' << aw.x[i] << '\t';
    if (aw.deleted[i]) {
      std::cout << "DEL\n";
    } else {
      std::cout << aw.y[i] << '\n';
    }
  }
  return 0;
}

int run_rankers(const std::string& order, std::size_t cap,
                const std::string& ws, std::uint64_t pos) {
  const Alphabet alpha = alphabet_for(order, {&ws});
  const Word u(ws, alpha);
  if (pos < 1 || pos > u.size()) {
    throw std::invalid_argument("position must lie in 1.." +
                                std::to_string(u.size()));
  }
  const auto attrs = attributes(u);
  const PredecessorDag dag = predecessor_dag(u);
  const CanonicalRankerTable tx = canonical_rankers(u, Direction::X);
  const CanonicalRankerTable ty = canonical_rankers(u, Direction::Y);

  std::cout << "position\t" << pos << '\n';
  std::cout << "letter\t" << u.at(pos) << '\n';
  std::cout << "x\t" << attrs[pos - 1].x << '\n';
  std::cout << "y\t" << attrs[pos - 1].y << '\n';
  std::cout << "canonical_x\t" << to_string(read_ranker(tx, pos)) << '\n';
  std::cout << "canonical_x_positions\t" << join(ranker_positions(tx, pos), ',')
            << '\n';
  std::cout << "canonical_y\t" << to_string(read_ranker(ty, pos)) << '\n';
  std::cout << "canonical_y_positions\t" << join(ranker_positions(ty, pos), ',')
            << '\n';
  std::cout << "predecessors\t" << join(dag.preds[pos - 1], ',') << '\n';
  try {
    const auto rankers = enumerate_rankers(dag, pos, cap);
    std::string line;
    for (const Ranker& r : rankers) {
      if (!line.empty()) line += ' ';
      line += to_string(r);
    }
    std::cout << "rankers\t" << line << '\n';
    std::cout << "ranker_count\t" << rankers.size() << '\n';
  } catch (const RankerCapExceeded&) {
    std::cout << "ranker_cap_exceeded\ttrue\n";
  }
  return 0;
}

int run_dfa(std::uint64_t k, const std::string& order, bool dot,
            const std::string& ws) {
  const Alphabet alpha = alphabet_for(order, {&ws});
  const SubwordDfa d = build_subword_dfa(Word(ws, alpha), k);
  if (dot) {
    std::cout << to_dot(d);
  } else {
    std::cout << "live_states\t" << d.live_states() << '\n';
    std::cout << "alphabet\t" << alpha.letters() << '\n';
  }
  return 0;
}

int run_oracle_subwords(std::uint64_t k, const std::string& order, bool force,
                        const std::string& ws) {
  const Alphabet alpha = alphabet_for(order, {&ws});
  const SubwordSet set = subwords_up_to(Word(ws, alpha), k, kDefaultSetGuard, force);
  for (const std::string& w : set.words) std::cout << w << '\n';
  return 0;
}

int run_oracle_naive_nf(std::uint64_t k, const std::string& order, bool force,
                        const std::string& ws) {
  const Alphabet alpha = alphabet_for(order, {&ws});
  std::cout << naive_shortlex(Word(ws, alpha), k, kDefaultNaiveLen,
                              kDefaultNaiveAlphabet, force)
                   .symbols()
            << '\n';
  return 0;
}

int run_oracle_naive_equiv(std::uint64_t k, const std::string& order,
                           bool force, const std::string& us,
                           const std::string& vs) {
  const Alphabet alpha = alphabet_for(order, {&us, &vs});
  const bool eq = naive_equivalent(Word(us, alpha), Word(vs, alpha), k,
                                   kDefaultSetGuard, force);
  std::cout << (eq ? "EQUIV" : "DISTINCT") << '\n';
  return eq ? 0 : 1;
}

int run_bench(const std::vector<std::uint64_t>& sizes,
              std::size_t alphabet_size, std::uint64_t k, std::uint64_t seed,
              int reps) {
  if (alphabet_size == 0 || alphabet_size > 256) {
    throw std::invalid_argument("alphabet size must lie in 1..256");
  }
  std::string letters(alphabet_size, '\0');
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    letters[i] = static_cast<char>(i < 26 ? 'a' + i : i);
  }
  const Alphabet alpha(letters);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet_size - 1);

  double prev_ns = -1.0;
  std::uint64_t prev_n = 0;
  bool drifted = false;
  std::size_t sink = 0;
  for (const std::uint64_t n : sizes) {
    std::string s(n, '\0');
    for (char& c : s) c = letters[pick(rng)];
    const Word u(std::move(s), alpha);
    double best_ms = -1.0;
    for (int rep = 0; rep < std::max(reps, 1); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const NormalForm nf = shortlex_normal_form(u, k);
      const auto t1 = std::chrono::steady_clock::now();
      sink += nf.word.size();
      const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (best_ms < 0 || ms < best_ms) best_ms = ms;
    }
    const double ns_per = n == 0 ? 0.0 : best_ms * 1e6 / static_cast<double>(n);
    std::cout << "n=" << n << " alphabet=" << alphabet_size << " k=" << k
              << " reps=" << std::max(reps, 1) << " best_ms=" << best_ms
              << " ns_per_letter=" << ns_per << '\n';
    if (prev_ns > 0 && ns_per > 0 && ns_per / prev_ns > 3.0) {
      std::cout << "WARN superlinear drift between n=" << prev_n
                << " and n=" << n << " (ratio " << ns_per / prev_ns << ")\n";
      drifted = true;
    }
    if (ns_per > 0) {
      prev_ns = ns_per;
      prev_n = n;
    }
  }
  if (!drifted) std::cout << "drift\tok\n";
  if (sink == static_cast<std::size_t>(-1)) std::cout << "";  // keep the work
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortlex normal forms for Simon's congruence"};
  app.require_subcommand(1);

  std::uint64_t k = 0;
  std::string order;
  std::string word_arg;
  std::string u_arg;
  std::string v_arg;
  bool with_attrs = false;
  bool use_stdin = false;
  bool witness = false;
  bool force = false;
  bool marked = false;
  bool dot = false;
  std::size_t cap = 1000;
  std::uint64_t pos = 0;
  std::vector<std::uint64_t> sizes = {10'000, 100'000, 1'000'000, 10'000'000};
  std::size_t alphabet_size = 26;
  std::uint64_t bench_k = 100;
  std::uint64_t seed = 0xC0FFEE;
  int reps = 3;

  std::function<int()> action;

  CLI::App* normalize = app.add_subcommand("normalize", "Print the shortlex normal form");
  normalize->add_option("--k", k, "congruence parameter")->required();
  normalize->add_option("--order", order, "explicit alphabet order");
  normalize->add_flag("--attrs", with_attrs, "also print the attribute table");
  normalize->add_flag("--stdin", use_stdin, "read words from stdin, one per line");
  normalize->add_option("word", word_arg, "input word");
  normalize->callback([&] {
    if (use_stdin == (normalize->count("word") > 0)) {
      throw CLI::ValidationError("normalize", "pass exactly one of <word> or --stdin");
    }
    action = [&] { return run_normalize(k, order, with_attrs, use_stdin, word_arg); };
  });

  CLI::App* equiv = app.add_subcommand("equiv", "Decide whether two words are ~k-equivalent");
  equiv->add_option("--k", k)->required();
  equiv->add_option("--order", order);
  equiv->add_flag("--witness", witness, "print a distinguishing subword when distinct");
  equiv->add_flag("--force", force, "override the witness oracle guard");
  equiv->add_option("u", u_arg)->required();
  equiv->add_option("v", v_arg)->required();
  equiv->callback([&] { action = [&] { return run_equiv(k, order, witness, force, u_arg, v_arg); }; });

  CLI::App* attrs = app.add_subcommand("attrs", "Print the attribute table of a word");
  attrs->add_option("--k", k, "required with --marked");
  attrs->add_option("--order", order);
  attrs->add_flag("--marked", marked, "show the deletion pass for the given k");
  attrs->add_option("word", word_arg)->required();
  attrs->callback([&] {
    if (marked && attrs->count("--k") == 0) {
      throw CLI::ValidationError("attrs", "--marked requires --k");
    }
    action = [&] { return run_attrs(marked, k, order, word_arg); };
  });

  CLI::App* rankers = app.add_subcommand("rankers", "Inspect rankers reaching one position");
  rankers->add_option("--order", order);
  rankers->add_option("--cap", cap, "enumeration cap");
  rankers->add_option("word", word_arg)->required();
  rankers->add_option("position", pos, "1-based position")->required();
  rankers->callback([&] { action = [&] { return run_rankers(order, cap, word_arg, pos); }; });

  CLI::App* dfa = app.add_subcommand("dfa", "Build the subword automaton");
  dfa->add_option("--k", k)->required();
  dfa->add_option("--order", order);
  dfa->add_flag("--dot", dot, "emit DOT instead of a summary");
  dfa->add_option("word", word_arg)->required();
  dfa->callback([&] { action = [&] { return run_dfa(k, order, dot, word_arg); }; });

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->require_subcommand(1);

  CLI::App* subwords = oracle->add_subcommand("subwords", "Dump all subwords up to length k");
  subwords->add_option("--k", k)->required();
  subwords->add_option("--order", order);
  subwords->add_flag("--force", force, "override the set-size guard");
  subwords->add_option("word", word_arg)->required();
  subwords->callback([&] { action = [&] { return run_oracle_subwords(k, order, force, word_arg); }; });

  CLI::App* naive_nf = oracle->add_subcommand("naive-nf", "Normal form by shortlex enumeration");
  naive_nf->add_option("--k", k)->required();
  naive_nf->add_option("--order", order);
  naive_nf->add_flag("--force", force, "override the word-size guard");
  naive_nf->add_option("word", word_arg)->required();
  naive_nf->callback([&] { action = [&] { return run_oracle_naive_nf(k, order, force, word_arg); }; });

  CLI::App* naive_eq = oracle->add_subcommand("naive-equiv", "Equivalence by subword-set comparison");
  naive_eq->add_option("--k", k)->required();
  naive_eq->add_option("--order", order);
  naive_eq->add_flag("--force", force, "override the set-size guard");
  naive_eq->add_option("u", u_arg)->required();
  naive_eq->add_option("v", v_arg)->required();
  naive_eq->callback([&] { action = [&] { return run_oracle_naive_equiv(k, order, force, u_arg, v_arg); }; });

  CLI::App* bench = app.add_subcommand("bench", "Time normalization at geometric word lengths");
  bench->add_option("--sizes", sizes, "word lengths to time")->delimiter(',');
  bench->add_option("--alphabet-size", alphabet_size, "number of letters");
  bench->add_option("--k", bench_k, "congruence parameter (default 100)");
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--reps", reps, "repetitions per size (best is kept)");
  bench->callback([&] { action = [&] { return run_bench(sizes, alphabet_size, bench_k, seed, reps); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
