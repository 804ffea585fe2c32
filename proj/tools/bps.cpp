#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "bps/pipeline.hpp"

namespace {

int default_jobs() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

void print_report_text(const bps::Report& r) {
  std::cout << "tuple:                (" << r.tuple.str() << ")\n";
  std::cout << "pairwise coprime:     " << (r.coprime ? "yes" : "no") << "\n";
  std::cout << "sum 1/a_i:            " << r.reciprocal_sum.str() << "\n";
  const auto& t = r.terminality;
  std::cout << "terminality:          " << (t.terminal ? "Terminal" : "NotTerminal") << "\n";
  if (t.min_scanned_h)
    std::cout << "  min h over scan:    " << t.min_scanned_h->str() << "\n";
  if (t.witness) {
    std::cout << "  witness p:          (";
    for (std::size_t i = 0; i < t.witness->size(); ++i)
      std::cout << (i ? "," : "") << t.witness->coords()[i].str();
    std::cout << ")  a_p = " << t.witness_discrepancy->str() << "\n";
  }
  if (t.scan_bound_used != 0)
    std::cout << "  scan bound (" << to_string(t.bound_mode)
              << "):   " << t.scan_bound_used.str() << "\n";
  std::cout << "blow-up weights:      (";
  for (std::size_t i = 0; i < r.weights.weights.size(); ++i)
    std::cout << (i ? "," : "") << r.weights.weights[i].str();
  std::cout << ")\n";
  std::cout << "except. discrepancy:  " << r.exceptional_discrepancy.str() << "\n";
  std::cout << "boundary on P^" << r.tuple.size() - 2 << ":      ";
  for (std::size_t i = 0; i < r.diff_coefficients.size(); ++i)
    std::cout << (i ? " + " : "") << r.diff_coefficients[i].str() << "*H" << i + 1;
  std::cout << "\n";
  std::cout << "log Fano:             " << (r.log_fano ? "yes" : "no") << "\n";
  std::cout << "coefficient bounds:   d_max = " << r.bounds.d_max.str()
            << (r.bounds.pass ? "  (pass)" : "  (fail)") << "\n";
  if (r.complement) {
    std::cout << "minimal complement:   n = " << r.complement->index << ", coefficients (";
    const auto& div = r.complement->divisor;
    for (std::size_t i = 0; i < div.rounded_coefficients.size(); ++i)
      std::cout << (i ? "," : "") << div.rounded_coefficients[i].str();
    std::cout << "), " << to_string(div.lc.status) << "\n";
  } else {
    std::cout << "minimal complement:   none found (n_max = " << r.n_max_used << ")\n";
  }
  std::cout << "exceptional candidate: " << (r.exceptional_candidate ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brieskorn-Pham singularity toolkit: terminality certification, "
               "weighted blow-up models, and bounded complements"};
  app.require_subcommand(1);

  // check
  std::string check_tuple, check_bound = "lcm";
  bool check_full = false, check_json = false;
  long long check_max_n = 100;
  auto* check = app.add_subcommand("check", "Analyze one exponent tuple end to end");
  check->add_option("tuple", check_tuple, "exponents a1,...,ak")->required();
  check->add_option("--bound", check_bound, "scan bound: lcm|product")
      ->check(CLI::IsMember({"lcm", "product"}));
  check->add_flag("--full-scan", check_full, "scan the whole range even after a failure");
  check->add_option("--max-n", check_max_n, "largest complement index to try");
  check->add_flag("--json", check_json, "emit the JSON report");

  // complement
  std::string comp_tuple;
  bool comp_json = false;
  long long comp_max_n = 100;
  auto* comp = app.add_subcommand("complement", "Minimal complement index of a tuple");
  comp->add_option("tuple", comp_tuple, "exponents a1,...,ak")->required();
  comp->add_option("--max-n", comp_max_n, "largest complement index to try");
  comp->add_flag("--json", comp_json, "emit JSON");

  // oracle
  std::string oracle_tuple;
  long long oracle_box = 0, oracle_limit = 10'000'000;
  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force minimum discrepancy over the box 1 <= p_i <= B");
  oracle->add_option("tuple", oracle_tuple, "exponents a1,...,ak")->required();
  oracle->add_option("--box", oracle_box, "box side")->required();
  oracle->add_option("--limit", oracle_limit, "refuse enumerations larger than this");

  // lct
  long long lct_dim = 0;
  std::string lct_coeffs;
  auto* lctc = app.add_subcommand(
      "lct", "Log canonical threshold of a generic hyperplane arrangement");
  lctc->add_option("--dim", lct_dim, "projective dimension N")->required();
  lctc->add_option("--coeffs", lct_coeffs, "coefficients c1,c2,... as num/den")->required();

  // search
  bps::SearchConfig cfg;
  std::string search_bound = "lcm", csv_path;
  cfg.jobs = default_jobs();
  auto* search = app.add_subcommand("search", "Sweep all nondecreasing tuples");
  search->add_option("--k", cfg.k, "tuple length")->required();
  search->add_option("--max-exp", cfg.max_exp, "largest exponent")->required();
  search->add_option("--jobs", cfg.jobs, "worker count");
  search->add_option("--max-n", cfg.n_max, "largest complement index to try");
  search->add_option("--out", cfg.out_path, "output file (newline-delimited JSON)");
  search->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint file");
  search->add_option("--bound", search_bound, "scan bound: lcm|product")
      ->check(CLI::IsMember({"lcm", "product"}));
  search->add_flag("--require-coprime", cfg.require_coprime,
                   "only pairwise coprime tuples");
  search->add_flag("--force", cfg.force, "override the enumeration size guard");
  search->add_option("--csv", csv_path, "also write a flattened CSV summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*check) {
      bps::AnalyzeOptions opt;
      opt.scan.mode = *bps::parse_bound_mode(check_bound);
      opt.scan.full_scan = check_full;
      opt.scan.jobs = default_jobs();
      opt.n_max = check_max_n;
      bps::Report r = bps::analyze(bps::ExponentTuple::parse(check_tuple), opt);
      if (check_json)
        std::cout << bps::report_to_json(r).dump(2) << "\n";
      else
        print_report_text(r);
    } else if (*comp) {
      bps::ExponentTuple a = bps::ExponentTuple::parse(comp_tuple);
      bps::LogFanoPair pair = bps::diff_boundary(a);
      auto mc = bps::minimal_complement_index(pair, comp_max_n);
      if (comp_json) {
        bps::Json j;
        j["tuple"] = comp_tuple;
        j["n_max"] = comp_max_n;
        if (mc) {
          j["minimal_index"] = mc->index;
          j["complement"] = bps::complement_to_json(mc->divisor);
        } else {
          j["minimal_index"] = nullptr;
          j["complement"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
      } else if (mc) {
        std::cout << "minimal index n = " << mc->index << "\ncoefficients: ";
        for (std::size_t i = 0; i < mc->divisor.rounded_coefficients.size(); ++i)
          std::cout << (i ? "," : "") << mc->divisor.rounded_coefficients[i].str();
        std::cout << "\npadding: " << mc->divisor.padding.size()
                  << "\nlc status: " << to_string(mc->divisor.lc.status) << "\n";
      } else {
        std::cout << "no n-complement found for n <= " << comp_max_n << "\n";
      }
    } else if (*oracle) {
      bps::ExponentTuple a = bps::ExponentTuple::parse(oracle_tuple);
      bps::BruteForceResult res =
          bps::brute_force_min_discrepancy(a, oracle_box, oracle_limit);
      std::cout << "min discrepancy " << res.min_value.str() << " at p=(";
      for (std::size_t i = 0; i < res.argmin.size(); ++i)
        std::cout << (i ? "," : "") << res.argmin.coords()[i].str();
      std::cout << ") over box " << oracle_box << "\n";
    } else if (*lctc) {
      bps::Arrangement arr;
      arr.projective_dim = lct_dim;
      std::stringstream ss(lct_coeffs);
      std::string tok;
      while (std::getline(ss, tok, ','))
        arr.coefficients.push_back(bps::Rational::parse(tok));
      auto t = bps::lct(arr);
      bps::LcReport rep = bps::lc_status(arr);
      std::cout << "lct: " << (t ? t->str() : "infinity") << "\n";
      std::cout << "lc status: " << to_string(rep.status) << " (worst flat: s="
                << rep.worst_flat_size << ", sum=" << rep.worst_flat_sum.str() << ")\n";
    } else if (*search) {
      cfg.bound_mode = *bps::parse_bound_mode(search_bound);
      bps::SearchSummary s = bps::search(cfg);
      std::cerr << "enumerated " << s.enumerated << " tuples, skipped " << s.skipped
                << ", analyzed " << s.analyzed;
      if (s.resumed) std::cerr << " (" << s.resumed << " resumed from checkpoint)";
      std::cerr << "\n";
      if (!csv_path.empty() && !cfg.out_path.empty()) {
        std::ifstream in(cfg.out_path);
        std::ofstream csv(csv_path, std::ios::trunc);
        csv << "tuple,terminal,min_h,log_fano,bounds_pass,minimal_index,candidate\n";
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          bps::Json j = bps::Json::parse(line);
          std::string tuple;
          for (const auto& v : j["tuple"])
            tuple += (tuple.empty() ? "" : " ") + v.dump();
          const auto& term = j["terminality"];
          csv << '"' << tuple << "\","
              << (term["status"] == "Terminal" ? 1 : 0) << ','
              << (term.contains("min_scanned_h") ? term["min_scanned_h"].dump() : "")
              << ',' << (j["log_fano"].get<bool>() ? 1 : 0) << ','
              << (j["bounds"]["pass"].get<bool>() ? 1 : 0) << ','
              << (j["minimal_index"].is_null() ? "" : j["minimal_index"].dump()) << ','
              << (j["exceptional_candidate"].get<bool>() ? 1 : 0) << "\n";
        }
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
      }
    }
  } catch (const bps::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
