#include "kacq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "kacq/acceptance.hpp"
#include "kacq/bruteforce.hpp"
#include "kacq/closedforms.hpp"
#include "kacq/errors.hpp"
#include "kacq/hall.hpp"
#include "kacq/kacpoly.hpp"

namespace kacq {

namespace {

using json = nlohmann::json;
using RF = RationalFunction;

struct Common {
  std::string format = "text";
  int max_space_log2 = 24;
  std::uint64_t max_group = 100000;
  int jobs = 1;
  std::string out;

  BruteConfig brute() const {
    BruteConfig c;
    c.max_space_log2 = max_space_log2;
    c.max_group = max_group;
    c.jobs = jobs;
    return c;
  }
};

// integers that fit in 64 bits as numbers, everything else as "a/b" strings
json rat_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

json int_json(const Int& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// coefficient array from degree 0; Laurent polynomials carry their lowest degree
json poly_json(const QPoly& p) {
  json a = json::array();
  long lo = std::min(0L, p.is_zero() ? 0L : p.low());
  for (long e = lo; e <= p.high(); ++e) a.push_back(rat_json(p.coeff(e)));
  if (lo < 0) return json{{"low", lo}, {"coefficients", a}};
  return a;
}

json rf_json(const RF& f) {
  if (f.is_polynomial()) return poly_json(f.num());
  return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}, {"string", f.pretty()}};
}

std::string rf_text(const RF& f) { return f.is_polynomial() ? f.num().str(true) : f.pretty(); }

json rank_json(const RankVector& r) { return json(r); }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Record {
  json j = json::object();
  std::vector<std::string> text;
};

Record record(const std::string& kind, const json& quiver, int alpha, const json& rank, const json& q) {
  Record r;
  r.j["kind"] = kind;
  r.j["quiver"] = quiver;
  r.j["alpha"] = alpha;
  r.j["rank"] = rank;
  r.j["q"] = q;
  return r;
}

void check_q(int q) {
  for (int ok : {2, 3, 4, 5, 7, 9, 25, 49})
    if (q == ok) return;
  throw Error(ErrorKind::UnsupportedField, "q = " + std::to_string(q) + " (supported: 2,3,4,5,7,9,25,49)");
}

void check_positive(int v, const char* name) {
  if (v < 1) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be >= 1");
}

RankVector rank_or_ones(const std::vector<int>& r, const Quiver& Q) {
  if (r.empty()) return ones(Q.num_vertices());
  if (static_cast<int>(r.size()) != Q.num_vertices())
    throw Error(ErrorKind::DimensionMismatch, "rank vector has " + std::to_string(r.size()) + " entries, quiver has " +
                                                  std::to_string(Q.num_vertices()) + " vertices");
  for (int v : r)
    if (v < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
  return r;
}

json quiver_json(const Quiver& Q) { return json::parse(quiver_to_json(Q)); }

std::vector<std::string> reversed(std::vector<std::string> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts of quiver representations over F_q[t]/(t^alpha)", "kacq-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-space-log2", c.max_space_log2, "cap on log2 of enumerated spaces")->check(CLI::Range(1, 60));
  app.add_option("--max-group", c.max_group, "cap on enumerated group orders");
  app.add_option("--jobs", c.jobs, "worker threads for counting sums")->check(CLI::Range(1, 256));
  app.add_option("--out", c.out, "also write the JSON record to this file");

  std::string quiver_path;
  int alpha = 1, q = 0, g = 1, rank = 1, r = 3, n = 1;
  std::vector<int> rankv, lambda;
  std::string method;

  auto* kac = app.add_subcommand("kac", "toric Kac polynomial A_(Q,alpha),1");
  kac->add_option("--quiver", quiver_path, "quiver JSON file")->required();
  kac->add_option("--alpha", alpha, "truncation order")->required();
  kac->add_option("--method", method, "trees (default), chains, or brute (needs --q)")
      ->check(CLI::IsMember({"trees", "chains", "brute"}));
  kac->add_option("--q", q, "evaluate at this field size");

  auto* kg = app.add_subcommand("kac-gloop", "A_(Q,alpha),r for the g-loop quiver, r <= 3");
  kg->add_option("--g", g, "number of loops")->required();
  kg->add_option("--alpha", alpha, "truncation order")->required();
  kg->add_option("--rank", rank, "rank 1..3")->required()->check(CLI::Range(1, 3));
  kg->add_option("--method", method, "recurrence (default) or closed")
      ->check(CLI::IsMember({"recurrence", "closed"}));

  auto* kk = app.add_subcommand("kac-kronecker", "A_(Q,alpha),(1,2) for the r-Kronecker quiver");
  kk->add_option("--r", r, "number of arrows")->required();
  kk->add_option("--alpha", alpha, "truncation order 1..5")->required()->check(CLI::Range(1, 5));
  kk->add_option("--method", method, "closed (default) or zeta")->check(CLI::IsMember({"closed", "zeta"}));

  auto* fc = app.add_subcommand("fiber-count", "#mu^{-1}(t^{alpha-1} lambda) over O_alpha");
  fc->add_option("--quiver", quiver_path, "quiver JSON file")->required();
  fc->add_option("--alpha", alpha, "truncation order")->required();
  fc->add_option("--rank", rankv, "rank vector (default all ones)")->delimiter(',');
  fc->add_option("--q", q, "field size; omitted: symbolic rank-1 count");
  fc->add_option("--lambda", lambda, "deformation vector (default zero)")->delimiter(',');

  auto* js = app.add_subcommand("jet-series", "N_n = #mu^{-1}(0) over F_q[t]/(t^n)");
  js->add_option("--quiver", quiver_path, "quiver JSON file")->required();
  js->add_option("--rank", rankv, "rank vector")->required()->delimiter(',');
  js->add_option("--q", q, "field size")->required();
  js->add_option("--n", n, "largest n")->required();

  std::string family_path;
  auto* ask = app.add_subcommand("ask", "average size of kernels of a linear family");
  ask->add_option("--family", family_path, "JSON {rows, cols, basis}")->required();
  ask->add_option("--q", q, "prime field size")->required();
  ask->add_option("--n", n, "largest n")->required();

  auto* lim = app.add_subcommand("limits", "alpha -> infinity limits of the rank-1 counts");
  lim->add_option("--quiver", quiver_path, "quiver JSON file")->required();

  auto* hil = app.add_subcommand("hilbert", "order-complex Hilbert series at the Betti specialisation");
  hil->add_option("--quiver", quiver_path, "quiver JSON file")->required();

  std::vector<int> left{1, 0}, right{0, 1};
  bool euler = false;
  auto* hall = app.add_subcommand("hall", "Hall products of orbit indicators for 1 -> 2 over O_alpha");
  hall->add_option("--alpha", alpha, "truncation order")->required();
  hall->add_option("--left", left, "rank of the left factor, e.g. 1,0")->delimiter(',')->expected(2);
  hall->add_option("--right", right, "rank of the right factor, e.g. 0,1")->delimiter(',')->expected(2);
  hall->add_option("--q", q, "field size");
  hall->add_flag("--euler", euler, "structure constants at q = 1 (interpolated)");

  std::vector<std::string> suites;
  std::vector<int> only;
  auto* ver = app.add_subcommand("verify", "run acceptance checks");
  ver->add_option("--suite", suites, "symbolic, brute, cross, hall")
      ->check(CLI::IsMember({"symbolic", "brute", "cross", "hall"}));
  ver->add_option("--only", only, "criterion ids")->delimiter(',');

  try {
    app.parse(reversed(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Record rec;
    if (kac->parsed()) {
      Quiver Q = load_quiver(quiver_path);
      check_positive(alpha, "alpha");
      if (q) check_q(q);
      if (method == "brute" && !q) throw Error(ErrorKind::InvalidArgument, "--method brute needs --q");
      if (!is_connected(Q)) throw Error(ErrorKind::NotConnected, "toric Kac polynomial needs a connected quiver");
      rec = record("toric_kac", quiver_json(Q), alpha, rank_json(ones(Q.num_vertices())), q ? json(q) : json());
      if (method == "brute") {
        long v = count_abs_indecomposable(Q, alpha, ones(Q.num_vertices()), q, c.brute());
        rec.j["value"] = v;
        rec.text.push_back(std::to_string(v));
      } else {
        QPoly p = method == "chains" ? toric_kac_wyss(Q, alpha) : toric_kac_trees(Q, alpha);
        if (q) {
          Rat v = p.eval(Rat(q));
          rec.j["value"] = rat_json(v);
          rec.text.push_back(v.get_str());
        } else {
          rec.j["value"] = poly_json(p);
          rec.text.push_back(p.str(true));
        }
      }
    } else if (kg->parsed()) {
      check_positive(g, "g");
      check_positive(alpha, "alpha");
      rec = record("gloop_kac", json{{"g", g}}, alpha, json{rank}, json());
      RF A;
      if (method == "closed") {
        if (rank == 1) A = RF::q(static_cast<long>(alpha) * g);
        else A = rank == 2 ? gloop_A2(g, alpha) : gloop_A3(g, alpha);
      } else {
        A = gloop_kac_from_recurrence(g, alpha, rank)[static_cast<size_t>(rank - 1)];
      }
      rec.j["value"] = rf_json(A);
      rec.text.push_back(rf_text(A));
    } else if (kk->parsed()) {
      if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1");
      rec = record("kronecker_kac", json{{"r", r}}, alpha, json{1, 2}, json());
      RF A = method == "zeta" ? kronecker_kac_from_zeta(r, alpha) : kronecker_A(r, alpha);
      rec.j["value"] = rf_json(A);
      rec.text.push_back(rf_text(A));
    } else if (fc->parsed()) {
      Quiver Q = load_quiver(quiver_path);
      check_positive(alpha, "alpha");
      RankVector rv = rank_or_ones(rankv, Q);
      if (!lambda.empty() && lambda.size() != rv.size())
        throw Error(ErrorKind::DimensionMismatch, "lambda has the wrong length");
      rec = record("moment_fiber", quiver_json(Q), alpha, rank_json(rv), q ? json(q) : json());
      if (!lambda.empty()) rec.j["lambda"] = lambda;
      if (q) {
        check_q(q);
        Int v = moment_fiber_count(Q, alpha, rv, q, lambda, FiberMethod::DirectKernel, c.brute());
        rec.j["value"] = int_json(v);
        rec.text.push_back(v.get_str());
      } else {
        if (rv != ones(Q.num_vertices()) || !lambda.empty())
          throw Error(ErrorKind::InvalidArgument, "symbolic fibre counts need rank 1 and lambda = 0; pass --q");
        RF f = rank1_fiber_count(Q, alpha);
        rec.j["value"] = rf_json(f);
        rec.text.push_back(rf_text(f));
      }
    } else if (js->parsed()) {
      Quiver Q = load_quiver(quiver_path);
      RankVector rv = rank_or_ones(rankv, Q);
      check_q(q);
      check_positive(n, "n");
      rec = record("jet_counts", quiver_json(Q), 0, rank_json(rv), q);
      auto N = jet_counts(Q, rv, q, n, c.brute());
      rec.j["value"] = json::array();
      for (size_t i = 0; i < N.size(); ++i) {
        rec.j["value"].push_back(int_json(N[i]));
        rec.text.push_back("N_" + std::to_string(i + 1) + " = " + N[i].get_str());
      }
    } else if (ask->parsed()) {
      check_q(q);
      check_positive(n, "n");
      LinearFamily fam;
      {
        std::ifstream in(family_path);
        if (!in) throw Error(ErrorKind::Parse, "cannot open family file " + family_path);
        try {
          json f = json::parse(in);
          fam.rows = f.at("rows").get<int>();
          fam.cols = f.at("cols").get<int>();
          fam.basis = f.at("basis").get<std::vector<std::vector<long>>>();
        } catch (const json::exception& e) {
          throw Error(ErrorKind::Parse, std::string("family JSON: ") + e.what());
        }
        for (const auto& b : fam.basis)
          if (static_cast<int>(b.size()) != fam.rows * fam.cols)
            throw Error(ErrorKind::DimensionMismatch, "basis matrix has the wrong number of entries");
      }
      rec = record("ask", json(), 0, json{fam.rows, fam.cols}, q);
      auto a = ask_counts(fam, q, n, c.brute());
      rec.j["value"] = json::array();
      for (size_t i = 0; i < a.size(); ++i) {
        rec.j["value"].push_back(rat_json(a[i]));
        rec.text.push_back("ask_" + std::to_string(i + 1) + " = " + a[i].get_str());
      }
    } else if (lim->parsed()) {
      Quiver Q = load_quiver(quiver_path);
      if (!is_2_connected(Q)) throw Error(ErrorKind::Not2Connected, "limits exist only for 2-connected quivers");
      rec = record("limits", quiver_json(Q), 0, rank_json(ones(Q.num_vertices())), json());
      RF A = limit_A(Q), B = limit_B(Q);
      rec.j["value"] = json{{"A", rf_json(A)}, {"B", rf_json(B)}};
      rec.text.push_back("A: " + A.pretty());
      rec.text.push_back("B: " + B.pretty());
    } else if (hil->parsed()) {
      Quiver Q = load_quiver(quiver_path);
      if (!is_2_connected(Q)) throw Error(ErrorKind::Not2Connected, "the specialisation needs a 2-connected quiver");
      rec = record("order_complex_hilbert", quiver_json(Q), 0, rank_json(ones(Q.num_vertices())), json());
      RF h = order_complex_hilbert(Q);
      rec.j["value"] = rf_json(h);
      rec.text.push_back(h.pretty());
    } else if (hall->parsed()) {
      check_positive(alpha, "alpha");
      if (euler == (q != 0)) throw Error(ErrorKind::InvalidArgument, "pass exactly one of --q and --euler");
      if (q) check_q(q);
      for (int v : left)
        if (v < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
      for (int v : right)
        if (v < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
      RankVector total{left[0] + right[0], left[1] + right[1]};
      rec = record("hall_product", json{{"vertices", {"1", "2"}}, {"arrows", {{{"src", 0}, {"dst", 1}}}}}, alpha,
                   json{{"left", left}, {"right", right}}, q ? json(q) : json(1));
      json table = json::array();
      for (const auto& l1 : hall_orbits(alpha, left))
        for (const auto& l2 : hall_orbits(alpha, right)) {
          auto f = HallFunction::indicator(alpha, left, l1), h = HallFunction::indicator(alpha, right, l2);
          HallFunction p = euler ? hall_product_euler(f, h) : hall_product(f, h, q);
          json vals = json::object();
          std::string line = "1_(" + join(left) + ")[" + join(l1) + "] * 1_(" + join(right) + ")[" + join(l2) + "] =";
          bool any = false;
          for (const auto& l : hall_orbits(alpha, total)) {
            Rat v = p(l);
            if (v == 0) continue;
            vals[join(l)] = rat_json(v);
            line += std::string(any ? " +" : "") + " " + (v == 1 ? std::string() : v.get_str() + " ") + "1_[" + join(l) + "]";
            any = true;
          }
          if (!any) line += " 0";
          table.push_back(json{{"left", join(l1)}, {"right", join(l2)}, {"product", vals}});
          rec.text.push_back(line);
        }
      rec.j["value"] = table;
    } else if (ver->parsed()) {
      AcceptanceOptions opt;
      opt.suites.insert(suites.begin(), suites.end());
      opt.only.insert(only.begin(), only.end());
      opt.jobs = c.jobs;
      json results = json::array();
      bool all = true;
      run_acceptance(opt, [&](const CriterionResult& cr) {
        if (c.format == "text") {
          out << format_result(cr) << "\n";
          for (const auto& note : cr.notes)
            if (note.rfind("MISMATCH", 0) == 0 || note.rfind("ERROR", 0) == 0) out << "    " << note << "\n";
          out.flush();
        }
        if (!cr.pass()) {
          all = false;
          err << "verification failed: criterion " << cr.id << ": " << cr.identity << "\n";
        }
        results.push_back(json{{"criterion", cr.id},
                               {"suite", cr.suite},
                               {"identity", cr.identity},
                               {"pass", cr.pass()},
                               {"seconds", cr.seconds},
                               {"notes", cr.notes}});
      });
      rec.j = json{{"kind", "verify"}, {"value", results}};
      if (c.format == "json") out << rec.j.dump(2) << "\n";
      if (!c.out.empty()) {
        std::ofstream f(c.out);
        f << rec.j.dump(2) << "\n";
      }
      return all ? kExitOk : kExitVerify;
    }

    if (c.format == "json") {
      out << rec.j.dump(2) << "\n";
    } else {
      for (const auto& line : rec.text) out << line << "\n";
    }
    if (!c.out.empty()) {
      std::ofstream f(c.out);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.out);
      f << rec.j.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitUsage;
  }
}

}  // namespace kacq
