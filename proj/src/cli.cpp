#include "treeact/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeact/errors.hpp"
#include "treeact/projmat.hpp"
#include "treeact/rep_family.hpp"
#include "treeact/search.hpp"
#include "treeact/tree.hpp"
#include "treeact/witness.hpp"
#include "treeact/words.hpp"

namespace treeact::cli {
namespace {

using nlohmann::ordered_json;

std::string resolve_word_text(const std::string& s) {
  return s == "@paper" ? certificate_word_flat() : s;
}

BigRational parse_rational(const std::string& s) {
  BigRational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw parse_error("invalid rational '" + s + "'", 0);
  if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

ProjectiveMatrix parse_matrix_csv(const std::string& s) {
  std::vector<BigInt> v;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw parse_error("empty matrix entry in '" + s + "'", 0);
    BigInt x;
    if (x.set_str(item.substr(b, e - b + 1), 10) != 0)
      throw parse_error("invalid matrix entry '" + item + "'", 0);
    v.push_back(std::move(x));
  }
  if (v.size() != 4)
    throw parse_error("expected four comma-separated integer entries in '" + s + "'", 0);
  return ProjectiveMatrix::from_integers(v[0], v[1], v[2], v[3]);
}

bool det_is_tree_smooth(const BigInt& det) {
  BigInt r = abs(det), tmp;
  mpz_remove(tmp.get_mpz_t(), r.get_mpz_t(), BigInt(2).get_mpz_t());
  mpz_remove(r.get_mpz_t(), tmp.get_mpz_t(), BigInt(3).get_mpz_t());
  return r == 1;
}

ordered_json matrix_json(const ProjectiveMatrix& m) {
  return ordered_json::array(
      {ordered_json::array({m.m11.get_str(), m.m12.get_str()}),
       ordered_json::array({m.m21.get_str(), m.m22.get_str()})});
}

ordered_json record_json(const WitnessRecord& r, bool with_displacements) {
  ordered_json j;
  j["word"] = r.word;
  j["length"] = r.word.size();
  j["matrix"] = matrix_json(r.matrix);
  j["det"] = r.det.get_str();
  j["trace"] = r.trace.get_str();
  j["order"] = r.order.to_string();
  if (with_displacements) {
    j["displacement2"] = r.displacement2;
    j["displacement3"] = r.displacement3;
  }
  return j;
}

void print_record_text(std::ostream& os, const WitnessRecord& r, bool with_displacements) {
  os << "word: " << r.word << "\n"
     << "length: " << r.word.size() << "\n"
     << "matrix: " << r.matrix.to_string() << "\n"
     << "det: " << r.det << "\n"
     << "trace: " << r.trace << "\n"
     << "order: " << r.order.to_string() << "\n";
  if (with_displacements)
    os << "displacement2: " << r.displacement2 << "\n"
       << "displacement3: " << r.displacement3 << "\n";
}

void stream_record_text(std::ostream& os, const WitnessRecord& r) {
  os << "word=" << r.word << " length=" << r.word.size() << " matrix=" << r.matrix.to_string()
     << " det=" << r.det << " trace=" << r.trace << " order=" << r.order.to_string()
     << " displacement2=" << r.displacement2 << " displacement3=" << r.displacement3 << "\n";
}

struct VerifyOpts {
  std::string word = "@paper";
  std::string format = "text";
};

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  const VerificationReport rep = verify_certificate(parse_word(resolve_word_text(o.word)));
  if (o.format == "structured") {
    for (const CheckResult& c : rep.checks) {
      ordered_json j;
      j["name"] = c.name;
      j["expected"] = c.expected;
      j["actual"] = c.actual;
      j["pass"] = c.pass;
      out << j.dump() << "\n";
    }
  } else {
    out << rep.text();
  }
  if (!rep.all_pass) {
    err << "verification failed at check: " << rep.first_failure << "\n";
    return 1;
  }
  return 0;
}

struct EvalOpts {
  std::string word;
  std::string t = "9";
  std::string format = "text";
};

int cmd_eval(const EvalOpts& o, std::ostream& out) {
  const RepFamily fam = make_family(parse_rational(o.t));
  const WitnessRecord r = build_record(parse_word(resolve_word_text(o.word)), fam);
  const bool smooth = det_is_tree_smooth(r.det);
  if (o.format == "structured")
    out << record_json(r, smooth).dump() << "\n";
  else
    print_record_text(out, r, smooth);
  return 0;
}

struct DisplaceOpts {
  std::string word;
  unsigned long p = 2;
  std::string t = "9";
  std::string format = "text";
};

int cmd_displace(const DisplaceOpts& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  const RepFamily fam = make_family(parse_rational(o.t));
  const ProjectiveMatrix m = evaluate_word(parse_word(resolve_word_text(o.word)), fam);
  const unsigned long d = displacement(m, ctx);
  if (o.format == "structured") {
    ordered_json j;
    j["word"] = format_word(free_reduce(parse_word(resolve_word_text(o.word))));
    j["p"] = o.p;
    j["displacement"] = d;
    out << j.dump() << "\n";
  } else {
    out << d << "\n";
  }
  return 0;
}

struct ReduceOpts {
  std::string word;
  bool exponent = false;
  std::string format = "text";
};

int cmd_reduce(const ReduceOpts& o, std::ostream& out) {
  const Word w = free_reduce(parse_word(resolve_word_text(o.word)));
  const std::string shown =
      format_word(w, o.exponent ? WordStyle::exponent : WordStyle::flat);
  if (o.format == "structured") {
    ordered_json j;
    j["word"] = shown;
    j["length"] = w.size();
    out << j.dump() << "\n";
  } else {
    out << shown << "\n";
  }
  return 0;
}

struct SearchOpts {
  unsigned max_length = 1;
  std::string mode;
  std::string t = "9";
  std::string gen_a, gen_b;
  std::size_t budget_mb = 4096;
  std::string persist, resume, out_path;
  bool emit_torsion = false;
  unsigned threads = 0;
  std::string format = "text";
};

int cmd_search(const SearchOpts& o, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.max_length = o.max_length;
  cfg.mode = o.mode == "bfs" ? SearchMode::bfs : SearchMode::mitm;
  cfg.t = parse_rational(o.t);
  if (!o.gen_a.empty() || !o.gen_b.empty()) {
    if (o.gen_a.empty() || o.gen_b.empty())
      throw parse_error("--gen-a and --gen-b must be given together", 0);
    cfg.generators = {parse_matrix_csv(o.gen_a), parse_matrix_csv(o.gen_b)};
  }
  cfg.memory_budget = o.budget_mb << 20;
  if (!o.persist.empty()) cfg.persist_path = o.persist;
  if (!o.resume.empty()) cfg.resume_path = o.resume;
  cfg.emit_torsion = o.emit_torsion;
  cfg.threads = o.threads;

  std::ofstream file;
  std::ostream* sink_os = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw io_error("cannot open output file: " + o.out_path);
    sink_os = &file;
  }
  const SearchStats st = run_search(cfg, [&](const WitnessRecord& r) {
    if (o.format == "structured")
      *sink_os << record_json(r, true).dump() << "\n";
    else
      stream_record_text(*sink_os, r);
  });
  if (!o.out_path.empty()) {
    file.flush();
    if (!file) throw io_error("failed writing output file: " + o.out_path);
  }
  err << "layers=" << st.layers << " elements=" << st.elements << " witnesses=" << st.witnesses
      << " seconds=" << std::fixed << std::setprecision(3) << st.seconds << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic of the Long-Reid tree action: certificate "
               "verification, word evaluation, Bruhat-Tits displacement, and "
               "witness search"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"text", "structured"});

  VerifyOpts vo;
  auto* verify = app.add_subcommand(
      "verify", "run the seven certificate checks (default word: the built-in witness)");
  verify->add_option("-w,--word", vo.word,
                     "word to check; @paper names the built-in 82-letter witness");
  verify->add_option("-f,--format", vo.format, "output format")->check(format_check);

  EvalOpts eo;
  auto* eval = app.add_subcommand("eval", "evaluate a word in the representation family");
  eval->add_option("-w,--word", eo.word, "word to evaluate (@paper = built-in witness)")
      ->required();
  eval->add_option("-t,--parameter", eo.t, "family parameter t (rational, not 0/1/-1)");
  eval->add_option("-f,--format", eo.format, "output format")->check(format_check);

  DisplaceOpts dopts;
  auto* displace = app.add_subcommand("displace", "tree displacement of a word at a prime");
  displace->add_option("-w,--word", dopts.word, "word to evaluate")->required();
  displace->add_option("-p,--prime", dopts.p, "prime selecting the tree")->required();
  displace->add_option("-t,--parameter", dopts.t, "family parameter t");
  displace->add_option("-f,--format", dopts.format, "output format")->check(format_check);

  ReduceOpts ro;
  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("-w,--word", ro.word, "word to reduce")->required();
  reduce->add_flag("-e,--exponent", ro.exponent, "print in exponent notation");
  reduce->add_option("-f,--format", ro.format, "output format")->check(format_check);

  SearchOpts so;
  auto* search = app.add_subcommand("search", "enumerate witnesses up to a word length");
  search->add_option("-L,--max-length", so.max_length, "maximum word length")->required();
  search->add_option("-m,--mode", so.mode, "search strategy")
      ->required()
      ->check(CLI::IsMember({"bfs", "mitm"}));
  search->add_option("-t,--parameter", so.t, "family parameter t");
  search->add_option("--gen-a", so.gen_a,
                     "override generator a: four comma-separated integers m11,m12,m21,m22");
  search->add_option("--gen-b", so.gen_b, "override generator b (same syntax)");
  search->add_option("--memory-budget-mb", so.budget_mb, "frontier memory budget in MiB");
  search->add_option("--persist", so.persist, "write the frontier here after each layer");
  search->add_option("--resume", so.resume, "resume from a persisted frontier");
  search->add_flag("--emit-torsion", so.emit_torsion,
                   "also emit finite-order stabilizer elements");
  search->add_option("--threads", so.threads, "worker threads (0 = all, 1 = serial)");
  search->add_option("-o,--out", so.out_path, "write witness records here instead of stdout");
  search->add_option("-f,--format", so.format, "output format")->check(format_check);

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(vo, out, err);
    if (eval->parsed()) return cmd_eval(eo, out);
    if (displace->parsed()) return cmd_displace(dopts, out);
    if (reduce->parsed()) return cmd_reduce(ro, out);
    if (search->parsed()) return cmd_search(so, out, err);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const degenerate_parameter_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_prime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const singular_matrix_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const smoothness_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_exceeded_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const treeact::error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace treeact::cli
