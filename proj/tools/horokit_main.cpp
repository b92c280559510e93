#include "horokit/horokit.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace horokit;

// Malformed input (exit 1), as opposed to well-formed input naming an invalid
// object (exit 2, raised by the library as logic/domain errors).
struct parse_fail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) throw parse_fail("malformed integer: '" + s + "'");
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw parse_fail("malformed integer: '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);  // cpp_int rejects a leading '+'
}

int parse_sign(const std::string& s) {
  Int v = parse_int(s);
  if (v != 1 && v != -1) throw parse_fail("sign must be +1 or -1, got '" + s + "'");
  return v == 1 ? +1 : -1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Curve parse_curve(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 2) throw parse_fail("curve must be 'p,q', got '" + s + "'");
  return Curve(parse_int(parts[0]), parse_int(parts[1]));
}

Factorization parse_factorization(const std::string& s) {
  Factorization f;
  for (const std::string& item : split(s, ';')) {
    std::vector<std::string> parts = split(item, ',');
    if (parts.size() != 3)
      throw parse_fail("factorization entries must be 'p,q,sign', got '" + item + "'");
    f.twists.emplace_back(Curve(parse_int(parts[0]), parse_int(parts[1])), parse_sign(parts[2]));
  }
  return f;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string type_text(const DecompositionType& t) {
  std::ostringstream os;
  os << "(g=" << t.g << ",u=" << t.u << ",l=" << t.l << ",h=" << t.h << ")";
  return os.str();
}

void print_classification_text(const Classification& c) {
  std::cout << "kind: " << kind_name(c.kind) << "\n"
            << "orientation: " << (c.orientation == 1 ? "+1" : "-1") << "\n"
            << "type: " << type_text(c.type) << "\n";
  if (c.epsilon) std::cout << "epsilon: " << (*c.epsilon == 1 ? "+1" : "-1") << "\n";
  if (c.triple)
    std::cout << "triple: (" << dec((*c.triple)[0]) << "," << dec((*c.triple)[1]) << ","
              << dec((*c.triple)[2]) << ")\n";
  if (c.ball) std::cout << "ball: " << ball_text(*c.ball) << "\n";
  if (c.ball_pair)
    std::cout << "balls: " << ball_text(c.ball_pair->first) << ", "
              << ball_text(c.ball_pair->second) << "\n";
}

int cmd_classify(const std::string& g1, const std::optional<std::string>& g2,
                 const std::string& d1s, const std::string& d2s, const std::string& fmt) {
  Curve c1 = parse_curve(g1);
  int d1 = parse_sign(d1s);
  nlohmann::json doc = make_doc("classify");
  Classification c;
  if (g2) {
    HorizontalDatum d{c1, parse_curve(*g2), d1, parse_sign(d2s)};
    c = classify_pair(d);
    doc["datum"] = {{"gamma1", json_of(d.gamma1)},
                    {"gamma2", json_of(d.gamma2)},
                    {"delta1", d.delta1},
                    {"delta2", d.delta2}};
  } else {
    c = classify_one(c1, d1);
    doc["datum"] = {{"gamma1", json_of(c1)}, {"delta1", d1}};
  }
  doc["result"] = json_of(c);
  if (fmt == "json")
    emit(doc);
  else
    print_classification_text(c);
  return 0;
}

int cmd_enumerate(const std::string& ns, const std::string& epss, const std::string& d1s,
                  const std::string& d2s, long bound, const std::string& fmt) {
  SolParams P{parse_int(ns), parse_sign(epss), parse_sign(d1s), parse_sign(d2s)};
  std::set<Solution> rows = enumerate_box(P, bound);
  if (fmt == "json") {
    nlohmann::json doc = make_doc("enumerate");
    doc["params"] = json_of(P);
    doc["bound"] = bound;
    doc["count"] = rows.size();
    doc["rows"] = nlohmann::json::array();
    for (const Solution& s : rows) doc["rows"].push_back(json_of(s));
    emit(doc);
  } else if (fmt == "csv") {
    std::cout << "x,y\n";
    for (const Solution& s : rows) std::cout << dec(s.x) << "," << dec(s.y) << "\n";
  } else {
    for (const Solution& s : rows) std::cout << "(" << dec(s.x) << "," << dec(s.y) << ")\n";
    std::cout << rows.size() << " rows\n";
  }
  return 0;
}

int cmd_descend(const std::string& xs, const std::string& ys, const std::string& ns,
                const std::string& epss, const std::string& d1s, const std::string& d2s,
                const std::string& fmt) {
  SolParams P{parse_int(ns), parse_sign(epss), parse_sign(d1s), parse_sign(d2s)};
  Solution start{parse_int(xs), parse_int(ys)};
  Descent d = descend(P, start);
  std::vector<Solution> trace{start};
  for (Mutation mv : d.moves)
    trace.push_back(mv == Mutation::X ? mutate_x(P, trace.back()) : mutate_y(P, trace.back()));
  if (fmt == "json") {
    nlohmann::json doc = make_doc("descend");
    doc["params"] = json_of(P);
    doc["start"] = json_of(start);
    doc["bottom"] = json_of(d.bottom);
    doc["moves"] = nlohmann::json::array();
    for (Mutation mv : d.moves) doc["moves"].push_back(mutation_name(mv));
    doc["trace"] = nlohmann::json::array();
    for (const Solution& s : trace) doc["trace"].push_back(json_of(s));
    emit(doc);
  } else {
    for (size_t i = 0; i < trace.size(); ++i) {
      std::cout << "(" << dec(trace[i].x) << "," << dec(trace[i].y) << ")";
      if (i + 1 < trace.size()) std::cout << " -" << mutation_name(d.moves[i]) << "-> ";
    }
    std::cout << "\n" << d.moves.size() << " moves to bottom\n";
  }
  return 0;
}

int cmd_hurwitz(const std::string& fs, const std::string& gs, long depth, const std::string& fmt) {
  Factorization f = parse_factorization(fs);
  Factorization g = parse_factorization(gs);
  if (depth < 0) throw parse_fail("depth must be >= 0");
  std::optional<std::vector<MoveStep>> w = hurwitz_equivalent(f, g, static_cast<size_t>(depth));
  if (fmt == "json") {
    nlohmann::json doc = make_doc("hurwitz");
    doc["depth"] = depth;
    doc["equivalent"] = w.has_value();
    if (w) {
      doc["moves"] = nlohmann::json::array();
      for (const MoveStep& m : *w) doc["moves"].push_back(json_of(m));
    } else {
      doc["moves"] = nullptr;
    }
    emit(doc);
  } else if (w) {
    std::cout << "equivalent: yes (" << w->size() << " moves)\n";
    for (const MoveStep& m : *w) std::cout << dir_name(m.dir) << " " << m.level << "\n";
  } else {
    std::cout << "equivalent: not within depth " << depth << "\n";
  }
  return 0;
}

int cmd_families(long m_max, const std::string& fmt) {
  if (m_max < 0) throw parse_fail("m-max must be >= 0");
  struct Row {
    long m;
    BallFamily fam;
    long index;
    RationalBall ball;
    LensSpace lens;
    bool markov;
  };
  std::vector<Row> rows;
  for (long m = 0; m <= m_max; ++m) {
    bool markov = is_markov(1, fib(2 * m - 1), fib(2 * m + 1));
    for (BallFamily fam : {BallFamily::B, BallFamily::BPrime}) {
      auto [hi, lo] = ball_pairs(m, fam);
      rows.push_back(Row{m, fam, m + 1, hi, lens_boundary(hi), markov});
      rows.push_back(Row{m, fam, m, lo, lens_boundary(lo), markov});
    }
  }
  if (fmt == "json") {
    nlohmann::json doc = make_doc("families");
    doc["m_max"] = m_max;
    doc["rows"] = nlohmann::json::array();
    for (const Row& r : rows)
      doc["rows"].push_back({{"m", r.m},
                             {"family", family_name(r.fam)},
                             {"index", r.index},
                             {"ball", json_of(r.ball)},
                             {"lens", json_of(r.lens)},
                             {"markov", r.markov}});
    emit(doc);
  } else if (fmt == "csv") {
    std::cout << "m,family,index,p,q,orientation,lens_a,lens_b,markov\n";
    for (const Row& r : rows)
      std::cout << r.m << "," << family_name(r.fam) << "," << r.index << "," << dec(r.ball.p)
                << "," << dec(r.ball.q) << "," << r.ball.orientation << "," << dec(r.lens.a)
                << "," << dec(r.lens.b) << "," << (r.markov ? "true" : "false") << "\n";
  } else {
    for (const Row& r : rows)
      std::cout << "m=" << std::setw(2) << r.m << "  " << std::setw(6) << family_name(r.fam)
                << "[" << r.index << "]  " << std::setw(24) << ball_text(r.ball) << "  boundary "
                << lens_text(r.lens) << (r.markov ? "  markov" : "") << "\n";
  }
  return 0;
}

int cmd_emit_kirby(const std::string& g1, const std::optional<std::string>& g2,
                   const std::string& d1s, const std::string& d2s, bool no_one_handle,
                   const std::string& fmt) {
  Curve c1 = parse_curve(g1);
  int d1 = parse_sign(d1s);
  KirbyDiagram k;
  if (g2) {
    if (no_one_handle) throw parse_fail("--no-one-handle applies to single-curve diagrams only");
    k = emit_kirby(HorizontalDatum{c1, parse_curve(*g2), d1, parse_sign(d2s)});
  } else {
    k = emit_kirby(c1, d1, !no_one_handle);
  }
  if (fmt == "json") {
    nlohmann::json doc = make_doc("emit-kirby");
    doc["diagram"] = json_of(k);
    emit(doc);
  } else {
    if (k.one_handles > 0) std::cout << "dotted unknot x" << k.one_handles << "\n";
    for (const KirbyTwoHandle& h : k.two_handles)
      std::cout << "2-handle on " << curve_text(h.curve) << " framing " << dec(h.framing) << "\n";
  }
  return 0;
}

int cmd_verify(long bound, long m_max, int samples, unsigned long long seed,
               const std::string& fmt) {
  if (bound < 1 || m_max < 0 || samples < 1) throw parse_fail("verify bounds must be positive");
  VerifyConfig cfg;
  cfg.box_bound = bound;
  cfg.m_max = m_max;
  cfg.samples = samples;
  cfg.seed = seed;
  std::vector<SuiteResult> results = verify_all(cfg);
  long passed = 0;
  for (const SuiteResult& r : results)
    if (r.pass) ++passed;
  if (fmt == "json") {
    nlohmann::json doc = make_doc("verify");
    doc["bound"] = bound;
    doc["suites"] = nlohmann::json::array();
    for (const SuiteResult& r : results) doc["suites"].push_back(json_of(r));
    doc["passed"] = passed;
    doc["total"] = results.size();
    emit(doc);
  } else {
    for (const SuiteResult& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(34) << r.name
                << " (" << r.checks << " checks)";
      if (!r.pass) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
    std::cout << passed << "/" << results.size() << " suites passed\n";
  }
  return passed == static_cast<long>(results.size()) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus-1 horizontal decomposition toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string g1, g2, d1 = "+1", d2 = "+1", fmt = "text";
  std::string n = "1", eps = "-1", x, y, fstr, gstr;
  long bound = 200, depth = 12, m_max = 15;
  int samples = 1000;
  unsigned long long seed = 20260815ull;
  bool no_one_handle = false;

  auto add_format = [&fmt](CLI::App* sub) {
    sub->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* classify = app.add_subcommand("classify", "classify a one- or two-curve datum");
  classify->add_option("--g1", g1, "first curve p,q")->required();
  classify->add_option("--g2", g2, "second curve p,q");
  classify->add_option("--d1", d1, "first twist sign +1/-1");
  classify->add_option("--d2", d2, "second twist sign +1/-1");
  add_format(classify);
  classify->callback([&] {
    exit_code = cmd_classify(g1, classify->count("--g2") ? std::optional(g2) : std::nullopt, d1,
                             d2, fmt);
  });

  CLI::App* enumerate = app.add_subcommand("enumerate", "list solution-set members in a box");
  enumerate->add_option("--n", n, "intersection number n")->required();
  enumerate->add_option("--eps", eps, "epsilon +1/-1")->required();
  enumerate->add_option("--d1", d1, "delta1 +1/-1")->required();
  enumerate->add_option("--d2", d2, "delta2 +1/-1")->required();
  enumerate->add_option("--bound", bound, "coordinate box bound")->envname("HOROKIT_BOUND");
  add_format(enumerate);
  enumerate->callback([&] { exit_code = cmd_enumerate(n, eps, d1, d2, bound, fmt); });

  CLI::App* descend_cmd = app.add_subcommand("descend", "run mutation descent to the bottom set");
  descend_cmd->add_option("--x", x, "x coordinate")->required();
  descend_cmd->add_option("--y", y, "y coordinate")->required();
  descend_cmd->add_option("--n", n, "intersection number n")->required();
  descend_cmd->add_option("--eps", eps, "epsilon +1/-1")->required();
  descend_cmd->add_option("--d1", d1, "delta1 +1/-1");
  descend_cmd->add_option("--d2", d2, "delta2 +1/-1");
  add_format(descend_cmd);
  descend_cmd->callback([&] { exit_code = cmd_descend(x, y, n, eps, d1, d2, fmt); });

  CLI::App* hurwitz = app.add_subcommand("hurwitz", "search for a Hurwitz move sequence");
  hurwitz->add_option("--f", fstr, "factorization p,q,sign;p,q,sign;...")->required();
  hurwitz->add_option("--g", gstr, "factorization p,q,sign;p,q,sign;...")->required();
  hurwitz->add_option("--depth", depth, "move budget");
  add_format(hurwitz);
  hurwitz->callback([&] { exit_code = cmd_hurwitz(fstr, gstr, depth, fmt); });

  CLI::App* families = app.add_subcommand("families", "tabulate the classified ball pairs");
  families->add_option("--m-max", m_max, "largest pair index");
  add_format(families);
  families->callback([&] { exit_code = cmd_families(m_max, fmt); });

  CLI::App* kirby = app.add_subcommand("emit-kirby", "print the handle diagram record");
  kirby->add_option("--g1", g1, "first curve p,q")->required();
  kirby->add_option("--g2", g2, "second curve p,q");
  kirby->add_option("--d1", d1, "first twist sign +1/-1");
  kirby->add_option("--d2", d2, "second twist sign +1/-1");
  kirby->add_flag("--no-one-handle", no_one_handle, "drop the dotted unknot (needs framing +-1)");
  add_format(kirby);
  kirby->callback([&] {
    exit_code = cmd_emit_kirby(g1, kirby->count("--g2") ? std::optional(g2) : std::nullopt, d1, d2,
                               no_one_handle, fmt);
  });

  CLI::App* verify = app.add_subcommand("verify", "run every property suite");
  verify->add_option("--bound", bound, "solution box bound")->envname("HOROKIT_BOUND");
  verify->add_option("--m-max", m_max, "largest pair index");
  verify->add_option("--samples", samples, "random samples per suite");
  verify->add_option("--seed", seed, "sampling seed");
  add_format(verify);
  verify->callback([&] { exit_code = cmd_verify(bound, m_max, samples, seed, fmt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const parse_fail& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
