// Command-line front end over the C interface.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "mmsc/mmsc.h"

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

int exit_for(int status) {
  switch (status) {
    case MMSC_OK: return kOk;
    case MMSC_NONE: return kNo;
    case MMSC_ERR_OVER_BUDGET: return kBudget;
    case MMSC_ERR_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

int report_error(int status) {
  std::cerr << "error (" << mmsc_status_name(status)
            << "): " << mmsc_last_error() << "\n";
  return exit_for(status);
}

struct InstanceDeleter {
  void operator()(mmsc_instance* p) const { mmsc_instance_free(p); }
};
struct ResultDeleter {
  void operator()(mmsc_result* p) const { mmsc_result_free(p); }
};
using InstancePtr = std::unique_ptr<mmsc_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<mmsc_result, ResultDeleter>;

// -1 keeps rationals exact only.
int approx_digits = -1;

std::string show(const char* rational) {
  if (!rational) return "-";
  std::string out = rational;
  if (approx_digits >= 0) {
    if (const char* d = mmsc_decimal(rational, approx_digits)) {
      out += " (~" + std::string(d) + ")";
    }
  }
  return out;
}

std::string bundle_text(const mmsc_result* res, int b) {
  int start = 0;
  int length = 0;
  if (mmsc_result_bundle_arc(res, b, &start, &length)) {
    return "arc " + std::to_string(start) + ":" + std::to_string(length);
  }
  std::string out = "goods {";
  int size = mmsc_result_bundle_size(res, b);
  for (int k = 0; k < size; ++k) {
    if (k) out += ",";
    out += std::to_string(mmsc_result_bundle_good(res, b, k));
  }
  return out + "}";
}

std::string split_text(const mmsc_result* res) {
  std::string out;
  for (int b = 0; b < mmsc_result_bundle_count(res); ++b) {
    std::string t = bundle_text(res, b);
    // "arc 3:3" -> "3:3" inside a split listing.
    out += " " + (t.rfind("arc ", 0) == 0 ? t.substr(4) : t.substr(6));
  }
  return out;
}

void print_allocation(const mmsc_result* res) {
  int count = mmsc_result_bundle_count(res);
  bool report = mmsc_result_has_report(res);
  for (int i = 0; i < count; ++i) {
    std::cout << "agent " << i + 1 << ": " << bundle_text(res, i);
    if (report) {
      std::cout << " value " << show(mmsc_result_agent_value(res, i))
                << " ratio " << show(mmsc_result_agent_ratio(res, i))
                << " mms " << show(mmsc_result_agent_mms(res, i));
    }
    std::cout << "\n";
  }
  if (report) {
    std::cout << "certified_c " << show(mmsc_result_certified_c(res)) << "\n";
    std::cout << "min_ratio " << show(mmsc_result_min_ratio(res)) << "\n";
  }
}

int load(const std::string& path, InstancePtr& out) {
  mmsc_instance* raw = nullptr;
  int status = mmsc_instance_load(path.c_str(), &raw);
  if (status != MMSC_OK) return status;
  out.reset(raw);
  return MMSC_OK;
}

int print_mms(const mmsc_instance* inst, int agent, int n, bool oracle) {
  mmsc_result* raw = nullptr;
  int status = mmsc_mms(inst, agent, n, oracle ? 1 : 0, &raw);
  if (status != MMSC_OK) return status;
  ResultPtr res(raw);
  std::cout << "agent " << agent + 1 << ": mms "
            << show(mmsc_result_value(res.get())) << " split"
            << split_text(res.get()) << "\n";
  return MMSC_OK;
}

int cmd_mms(const std::string& file, int agent, int n, bool oracle) {
  InstancePtr inst;
  if (int s = load(file, inst)) return report_error(s);
  int agents = mmsc_instance_agents(inst.get());
  if (agent > agents) {
    std::cerr << "error (usage): agent " << agent << " out of range 1.."
              << agents << "\n";
    return kUsage;
  }
  for (int i = 0; i < agents; ++i) {
    if (agent > 0 && i != agent - 1) continue;
    if (int s = print_mms(inst.get(), i, n, oracle)) return report_error(s);
  }
  return kOk;
}

int cmd_allocate(const std::string& file, const std::string& method) {
  InstancePtr inst;
  if (int s = load(file, inst)) return report_error(s);
  mmsc_result* raw = nullptr;
  int status = mmsc_allocate(inst.get(), method.c_str(), &raw);
  if (status != MMSC_OK && status != MMSC_NONE) return report_error(status);
  ResultPtr res(raw);
  std::cout << "method " << mmsc_result_method(res.get()) << "\n";
  if (status == MMSC_NONE) {
    std::cout << "NONE\n";
    return kNo;
  }
  std::cout << "provenance " << mmsc_result_provenance(res.get()) << "\n";
  print_allocation(res.get());
  return kOk;
}

int cmd_oracle(const std::string& file, bool max_c, bool exists, int mms_agent) {
  InstancePtr inst;
  if (int s = load(file, inst)) return report_error(s);
  if (mms_agent > 0) {
    if (mms_agent > mmsc_instance_agents(inst.get())) {
      std::cerr << "error (usage): agent out of range\n";
      return kUsage;
    }
    if (int s = print_mms(inst.get(), mms_agent - 1, 0, true)) {
      return report_error(s);
    }
    return kOk;
  }
  mmsc_result* raw = nullptr;
  if (max_c) {
    int status = mmsc_oracle_max_c(inst.get(), &raw);
    if (status != MMSC_OK) return report_error(status);
    ResultPtr res(raw);
    if (mmsc_result_unbounded(res.get())) {
      std::cout << "unbounded\n";
    } else {
      std::cout << show(mmsc_result_value(res.get())) << "\n";
    }
    print_allocation(res.get());
    return kOk;
  }
  (void)exists;
  int status = mmsc_oracle_exists(inst.get(), &raw);
  if (status != MMSC_OK && status != MMSC_NONE) return report_error(status);
  ResultPtr res(raw);
  if (status == MMSC_NONE) {
    std::cout << "NO\n";
    return kNo;
  }
  std::cout << "YES\n";
  print_allocation(res.get());
  return kOk;
}

int cmd_gen(int m, int n, int types, std::uint64_t seed, int max_value) {
  mmsc_instance* raw = nullptr;
  int status = mmsc_instance_generate(m, n, types, seed, max_value, &raw);
  if (status != MMSC_OK) return report_error(status);
  InstancePtr inst(raw);
  std::cout << mmsc_instance_text(inst.get());
  return kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Row {
  std::string instance;
  std::string method;
  std::string status;
  std::string agent_mms;
  std::string agent_values;
  std::string certified_c;
  std::string min_ratio;
  std::string oracle_max_c;
  std::string wall_ms;
  std::string error;
};

std::string one_line(std::string s) {
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

std::string joined(const mmsc_result* res, bool mms) {
  std::string out;
  for (int i = 0; i < mmsc_result_bundle_count(res); ++i) {
    if (i) out += ";";
    const char* v = mms ? mmsc_result_agent_mms(res, i)
                        : mmsc_result_agent_value(res, i);
    out += v ? v : "-";
  }
  return out;
}

std::string oracle_column(const mmsc_instance* inst) {
  mmsc_result* raw = nullptr;
  int status = mmsc_oracle_max_c(inst, &raw);
  if (status != MMSC_OK) return mmsc_status_name(status);
  ResultPtr res(raw);
  if (mmsc_result_unbounded(res.get())) return "unbounded";
  return mmsc_result_value(res.get());
}

std::vector<Row> batch_instance(const fs::path& file, bool oracle) {
  std::vector<Row> rows;
  std::string id = file.filename().string();
  InstancePtr inst;
  if (int s = load(file.string(), inst)) {
    Row row;
    row.instance = id;
    row.method = "-";
    row.status = mmsc_status_name(s);
    row.error = one_line(mmsc_last_error());
    rows.push_back(row);
    return rows;
  }
  std::string max_c = oracle ? oracle_column(inst.get()) : "";
  for (int k = 0; k < mmsc_method_count(); ++k) {
    const char* method = mmsc_method_name(k);
    if (mmsc_method_applicable(inst.get(), method) != MMSC_OK) continue;
    Row row;
    row.instance = id;
    row.method = method;
    row.oracle_max_c = max_c;
    auto begin = std::chrono::steady_clock::now();
    mmsc_result* raw = nullptr;
    int status = mmsc_allocate(inst.get(), method, &raw);
    auto end = std::chrono::steady_clock::now();
    row.wall_ms = std::to_string(
        std::chrono::duration<double, std::milli>(end - begin).count());
    row.status = mmsc_status_name(status);
    if (status == MMSC_OK || status == MMSC_NONE) {
      ResultPtr res(raw);
      if (mmsc_result_has_report(res.get())) {
        row.agent_mms = joined(res.get(), true);
        row.agent_values = joined(res.get(), false);
        row.certified_c = mmsc_result_certified_c(res.get());
        const char* mr = mmsc_result_min_ratio(res.get());
        row.min_ratio = mr ? mr : "-";
      }
    } else {
      row.error = one_line(mmsc_last_error());
    }
    rows.push_back(row);
  }
  if (rows.empty()) {
    Row row;
    row.instance = id;
    row.method = "-";
    row.status = "no-method";
    row.oracle_max_c = max_c;
    rows.push_back(row);
  }
  return rows;
}

int cmd_batch(const std::string& dir, const std::string& csv, bool oracle) {
  std::error_code ec;
  std::vector<fs::path> files;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file()) files.push_back(it->path());
  }
  if (ec) {
    std::cerr << "error (usage): cannot read directory " << dir << ": "
              << ec.message() << "\n";
    return kUsage;
  }
  std::sort(files.begin(), files.end());
  std::vector<Row> rows;
  for (const fs::path& f : files) {
    for (Row& r : batch_instance(f, oracle)) rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.instance, a.method) < std::tie(b.instance, b.method);
  });

  std::ostringstream out;
  out << "instance,method,status,agent_mms,agent_values,certified_c,"
         "min_ratio,oracle_max_c,wall_ms,error\n";
  for (const Row& r : rows) {
    out << csv_field(r.instance) << ',' << csv_field(r.method) << ','
        << r.status << ',' << r.agent_mms << ',' << r.agent_values << ','
        << r.certified_c << ',' << r.min_ratio << ',' << r.oracle_max_c
        << ',' << r.wall_ms << ',' << csv_field(r.error) << '\n';
  }
  if (csv.empty() || csv == "-") {
    std::cout << out.str();
    return kOk;
  }
  std::ofstream file(csv);
  file << out.str();
  if (!file) {
    std::cerr << "error (usage): cannot write " << csv << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximin-share allocations of goods on graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--approx", approx_digits,
                 "also print decimals with this many digits")
      ->check(CLI::Range(0, 60));

  std::string file;
  auto* mms = app.add_subcommand("mms", "mms value and split per agent");
  int agent = 0;
  int bundles = 0;
  bool use_oracle = false;
  mms->add_option("file", file, "instance file")->required();
  mms->add_option("--agent", agent, "agent (1-based); default all")
      ->check(CLI::PositiveNumber);
  mms->add_option("--n", bundles, "number of bundles; default agent count")
      ->check(CLI::PositiveNumber);
  mms->add_flag("--oracle", use_oracle, "brute force (needed for general graphs)");

  auto* allocate = app.add_subcommand("allocate", "construct an allocation");
  std::string method = "auto";
  allocate->add_option("file", file, "instance file")->required();
  allocate->add_option("--method", method, "method name or auto");

  auto* oracle = app.add_subcommand("oracle", "brute-force answers");
  bool max_c = false;
  bool exists = false;
  int oracle_agent = 0;
  oracle->add_option("file", file, "instance file")->required();
  auto* g_max = oracle->add_flag("--max-c", max_c, "largest achievable c");
  auto* g_exists = oracle->add_flag("--exists", exists,
                                    "does an mms-allocation exist");
  auto* g_mms = oracle->add_option("--mms", oracle_agent, "mms of agent (1-based)")
                    ->check(CLI::PositiveNumber);
  g_max->excludes(g_exists)->excludes(g_mms);
  g_exists->excludes(g_mms);

  auto* gen = app.add_subcommand("gen", "random cycle instance");
  int m = 0;
  int n = 0;
  int types = 0;
  std::uint64_t seed = 0;
  int max_value = 10;
  gen->add_option("--m", m, "goods")->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", n, "agents")->required()->check(CLI::PositiveNumber);
  gen->add_option("--types", types, "distinct rows (0: independent)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--max-value", max_value, "largest utility")
      ->check(CLI::NonNegativeNumber);

  auto* batch = app.add_subcommand("batch", "CSV over a directory");
  std::string dir;
  std::string csv;
  bool no_oracle = false;
  batch->add_option("dir", dir, "directory of instance files")->required();
  batch->add_option("--csv", csv, "output file (default stdout)");
  batch->add_flag("--no-oracle", no_oracle, "skip the oracle max-c column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (mms->parsed()) return cmd_mms(file, agent, bundles, use_oracle);
  if (allocate->parsed()) return cmd_allocate(file, method);
  if (oracle->parsed()) {
    if (!max_c && !exists && oracle_agent == 0) {
      std::cerr << "error (usage): oracle needs --max-c, --exists or --mms\n";
      return kUsage;
    }
    return cmd_oracle(file, max_c, exists, oracle_agent);
  }
  if (gen->parsed()) return cmd_gen(m, n, types, seed, max_value);
  return cmd_batch(dir, csv, !no_oracle);
}
