/*
 * Copyright 2026 The qboard Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qboard/fano.hpp"
#include "qboard/qhit.hpp"
#include "qboard/qpoly.hpp"
#include "qboard/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qboard;

namespace {

struct GlobalFlags {
    int threads = 0;
    uint64_t budget = 100'000'000;
    std::string format = "table";
    std::string samples;
};

std::vector<long> parse_samples(const std::string& text) {
    if (text.empty()) return default_sample_set();
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    return out;
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct RunReport {
    std::string command;
    std::string inputsDigest;
    json results = json::object();
    std::vector<std::string> failures;
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    json toJson() const {
        json j;
        j["command"] = command;
        j["inputsDigest"] = inputsDigest;
        j["wallTime"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        j["results"] = results;
        j["failures"] = failures;
        return j;
    }
};

json bigints_to_json(const std::vector<BigInt>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

std::string bigints_to_bracket(const std::vector<BigInt>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

void apply_thread_env(GlobalFlags& flags) {
    if (const char* env = std::getenv("QBOARD_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) flags.threads = v;
    }
    if (flags.threads > 0) omp_set_num_threads(flags.threads);
}

EnumOptions make_enum_opts(const GlobalFlags& flags) {
    EnumOptions eo;
    eo.threads = flags.threads;
    eo.budget = flags.budget;
    return eo;
}

int emit(const RunReport& report, const GlobalFlags& flags,
         const std::string& tableText) {
    if (flags.format == "json")
        std::cout << report.toJson().dump(2) << "\n";
    else {
        std::cout << tableText;
        for (const auto& f : report.failures) std::cerr << "error: " << f << "\n";
    }
    return report.failures.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- rook
int cmd_rook(const std::string& boardFile, const std::string& genPattern, int i,
             bool hit, GlobalFlags& flags) {
    apply_thread_env(flags);
    RunReport report;
    report.command = "rook";
    const std::string text = read_file(boardFile);
    report.inputsDigest = hex64(fnv1a(text));
    Board b = Board::parse(text);
    std::ostringstream table;
    if (!genPattern.empty()) {
        Pattern p = pattern_from_name(genPattern);
        BigInt v = gen_rook(b, p, i);
        report.results["pattern"] = pattern_name(p);
        report.results["i"] = i;
        report.results["genRook"] = v.str();
        table << v << "\n";
    } else if (hit) {
        RookVector h = hit_numbers(b);
        report.results["hit"] = bigints_to_json(h);
        table << bigints_to_bracket(h) << "\n";
    } else {
        RookVector r = rook_numbers(b);
        report.results["rook"] = bigints_to_json(r);
        table << bigints_to_bracket(r) << "\n";
    }
    if (b.rowCount() > b.colCount()) report.results["transposed"] = true;
    return emit(report, flags, table.str());
}

// ---------------------------------------------------------------- qcount
int cmd_qcount(const std::string& boardFile, long q, const std::string& method,
               bool census, GlobalFlags& flags) {
    apply_thread_env(flags);
    RunReport report;
    report.command = "qcount";
    const std::string text = read_file(boardFile);
    report.inputsDigest = hex64(fnv1a(text));
    Board b = Board::parse(text);
    FieldContext f = FieldContext::make(q);
    EnumOptions eo = make_enum_opts(flags);
    eo.supportDetail = census && b.cellCount() <= 16;

    RankCounts counts;
    json censusJson;
    std::ostringstream table;
    if (method == "brute") {
        try {
            counts = m_bruteforce(b, f, eo);
        } catch (const BudgetError& e) {
            throw BudgetError(std::string(e.what()) +
                              " (try --method orbit or a smaller q)");
        }
    } else if (method == "orbit") {
        OrbitResult res = m_orbit(b, f, eo);
        counts = std::move(res.counts);
        censusJson = json::object();
        censusJson["orbitsByRank"] = bigints_to_json(res.census.orbitsByRank);
        json byForest = json::object();
        for (size_t fe = 0; fe < res.census.repsByForest.size(); ++fe) {
            uint64_t tot = 0;
            for (uint64_t v : res.census.repsByForest[fe]) tot += v;
            if (tot) byForest[std::to_string(fe)] = tot;
        }
        censusJson["orbitsByForestEdges"] = byForest;
    } else {
        throw std::invalid_argument("method must be brute or orbit");
    }
    std::vector<BigInt> M = q_rook_from_counts(counts);
    report.results["q"] = q;
    report.results["method"] = method;
    report.results["m"] = bigints_to_json(counts.byRank);
    report.results["M"] = bigints_to_json(M);
    if (!censusJson.is_null()) report.results["orbitCensus"] = censusJson;
    table << "m " << bigints_to_bracket(counts.byRank) << "\n"
          << "M " << bigints_to_bracket(M) << "\n";
    return emit(report, flags, table.str());
}

// ---------------------------------------------------------------- qhit
int cmd_qhit(const std::string& boardFile, long q, int k, GlobalFlags& flags) {
    apply_thread_env(flags);
    RunReport report;
    report.command = "qhit";
    const std::string text = read_file(boardFile);
    report.inputsDigest = hex64(fnv1a(text));
    Board b = Board::parse(text);
    FieldContext f = FieldContext::make(q);
    EnumOptions eo = make_enum_opts(flags);
    QHitVector H = q_hit_genfun(b, f, eo);
    std::ostringstream table;
    report.results["q"] = q;
    if (k >= 0) {
        BigInt v = k < static_cast<int>(H.values.size()) ? H.values[k] : BigInt(0);
        report.results["k"] = k;
        report.results["H_k"] = v.str();
        table << v << "\n";
    } else {
        report.results["H"] = bigints_to_json(H.values);
        table << bigints_to_bracket(H.values) << "\n";
    }
    return emit(report, flags, table.str());
}

// ---------------------------------------------------------------- residue
int cmd_residue(const std::string& boardFile, const std::string& target, int d,
                int k, GlobalFlags& flags) {
    apply_thread_env(flags);
    RunReport report;
    report.command = "residue";
    const std::string text = read_file(boardFile);
    report.inputsDigest = hex64(fnv1a(text));
    Board b = Board::parse(text);
    std::vector<long> samples = parse_samples(flags.samples);
    EnumOptions eo = make_enum_opts(flags);

    Sampler sampler;
    if (target == "qrook") {
        sampler = [&, d](long q) {
            FieldContext f = FieldContext::make(q);
            return q_rook(b, f, d, eo);
        };
    } else if (target == "qhit") {
        sampler = [&, d](long q) {
            FieldContext f = FieldContext::make(q);
            return q_hit_direct(b, q, d, q_rook_all(b, f, eo));
        };
    } else {
        throw std::invalid_argument("target must be qrook or qhit");
    }
    ResidueFit fit = fit_residue(sampler, k, samples);
    report.results = json::parse(fit.toJson());
    if (!fit.ok) report.failures.push_back(fit.failReason);
    std::ostringstream table;
    if (fit.split) {
        table << "split mod " << fit.split->modulus << ":\n";
        for (const auto& [cls, coeffs] : fit.split->classes)
            table << "  q=" << cls << " (mod " << fit.split->modulus << "): "
                  << bigints_to_bracket(coeffs) << "\n";
    } else if (fit.ok) {
        table << bigints_to_bracket(fit.coeffs) << "\n";
    } else {
        table << "unfittable\n";
    }
    return emit(report, flags, table.str());
}

// ---------------------------------------------------------------- verify
int cmd_verify(const std::string& suite, GlobalFlags& flags) {
    apply_thread_env(flags);
    RunReport report;
    report.command = "verify";
    report.inputsDigest = hex64(fnv1a(suite));
    VerifyOptions vo;
    vo.threads = flags.threads;
    vo.budget = flags.budget;
    SuiteReport rep = run_suite(suite, vo);
    json checks = json::array();
    std::ostringstream table;
    for (const auto& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(cj);
        table << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) table << " -- " << c.detail;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", c.seconds);
        table << buf << "\n";
        if (!c.pass) report.failures.push_back(c.name + ": " + c.detail);
    }
    report.results["suite"] = suite;
    report.results["checks"] = checks;
    return emit(report, flags, table.str());
}

// ---------------------------------------------------------------- search
struct SearchState {
    std::map<std::string, int64_t> shells;  // "mxn" -> last completed mask
    std::vector<json> findings;
    long boardsChecked = 0;

    static SearchState load(const std::string& path) {
        SearchState s;
        std::ifstream in(path);
        if (!in) return s;
        json j = json::parse(in);
        for (auto& [key, val] : j.at("shells").items())
            s.shells[key] = val.get<int64_t>();
        for (auto& f : j.at("findings")) s.findings.push_back(f);
        s.boardsChecked = j.at("boardsChecked").get<long>();
        return s;
    }
    void save(const std::string& path) const {
        json j;
        json shellJson = json::object();
        for (const auto& [key, val] : shells) shellJson[key] = val;
        j["shells"] = shellJson;
        j["findings"] = findings;
        j["boardsChecked"] = boardsChecked;
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
};

int cmd_search(int maxM, int maxN, int k, const std::string& stateFile,
               long stopAfter, GlobalFlags& flags) {
    apply_thread_env(flags);
    RunReport report;
    report.command = "search";
    report.inputsDigest =
        hex64(fnv1a(std::to_string(maxM) + "x" + std::to_string(maxN) + "k" +
                    std::to_string(k)));
    std::vector<long> samples = parse_samples(flags.samples);
    EnumOptions eo = make_enum_opts(flags);

    SearchState state;
    if (!stateFile.empty()) state = SearchState::load(stateFile);
    long processedThisRun = 0;
    bool interrupted = false;

    for (int m = 1; m <= maxM && !interrupted; ++m) {
        for (int n = m; n <= maxN && !interrupted; ++n) {
            const std::string shell = std::to_string(m) + "x" + std::to_string(n);
            const int64_t total = int64_t{1} << (m * n);
            int64_t startMask = 0;
            if (auto it = state.shells.find(shell); it != state.shells.end())
                startMask = it->second + 1;
            Board grid(m, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) grid.set(r, c);
            const std::vector<Cell> cells = grid.cells();
            for (int64_t mask = startMask; mask < total; ++mask) {
                if (stopAfter > 0 && processedThisRun >= stopAfter) {
                    interrupted = true;
                    break;
                }
                Board b(m, n);
                for (size_t i = 0; i < cells.size(); ++i)
                    if ((mask >> i) & 1) b.set(cells[i].row, cells[i].col);
                std::map<long, std::vector<BigInt>> M;
                for (long q : samples) {
                    FieldContext f = FieldContext::make(q);
                    M[q] = q_rook_all(b, f, eo);
                }
                for (int d = 0; d <= std::min(m, n); ++d) {
                    Sampler s = [&](long q) { return q_hit_direct(b, q, d, M[q]); };
                    ResidueFit fit = fit_residue(s, k, samples);
                    if (!fit.ok || fit.split) {
                        json f;
                        f["shell"] = shell;
                        f["mask"] = mask;
                        f["d"] = d;
                        f["kind"] = fit.ok ? "residue-class-split" : "unfittable";
                        state.findings.push_back(f);
                    }
                    if (m == n) {
                        auto [h_d, C_d] = hit_residue_formula(b, d);
                        if (C_d < 0) {
                            json f;
                            f["shell"] = shell;
                            f["mask"] = mask;
                            f["d"] = d;
                            f["kind"] = "negative-C";
                            state.findings.push_back(f);
                        }
                    }
                }
                state.shells[shell] = mask;
                ++state.boardsChecked;
                ++processedThisRun;
                if (!stateFile.empty() && (mask % 64 == 63 || mask + 1 == total))
                    state.save(stateFile);
            }
        }
    }
    if (!stateFile.empty()) state.save(stateFile);
    report.results["boardsChecked"] = state.boardsChecked;
    report.results["findings"] = state.findings;
    report.results["interrupted"] = interrupted;
    std::ostringstream table;
    table << "boards checked: " << state.boardsChecked << "\n"
          << "findings: " << state.findings.size() << "\n";
    if (interrupted) {
        table << "interrupted; resume with the same --state file\n";
        emit(report, flags, table.str());
        return 3;
    }
    return emit(report, flags, table.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rook/hit numbers, finite-field rank-support counts, "
                 "q-analogues, and residue verification"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_option("--threads", flags.threads,
                   "worker threads (QBOARD_THREADS overrides)");
    app.add_option("--budget", flags.budget, "enumeration budget (representatives)");
    app.add_option("--format", flags.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--samples", flags.samples,
                   "comma-separated prime-power sample set");

    std::string boardFile, genPattern, method = "orbit", target = "qhit";
    std::string suite = "all", stateFile;
    long q = 2, stopAfter = 0;
    int i = 0, d = 0, k = 2, maxM = 3, maxN = 3;
    int singleK = -1;
    bool hit = false, census = false;

    auto* rookCmd = app.add_subcommand("rook", "rook numbers and generalized rook numbers");
    rookCmd->add_option("board", boardFile, "board file")->required();
    rookCmd->add_option("--gen", genPattern, "pattern: Z, Shoelace, WedgeRow, WedgeCol");
    rookCmd->add_option("--i", i, "rook count alongside the pattern");
    rookCmd->add_flag("--hit", hit, "print hit numbers instead");

    auto* qcountCmd = app.add_subcommand("qcount", "matrix counts by rank over GF(q)");
    qcountCmd->add_option("board", boardFile, "board file")->required();
    qcountCmd->add_option("--q", q, "prime power")->required();
    qcountCmd->add_option("--method", method, "brute or orbit")
        ->check(CLI::IsMember({"brute", "orbit"}));
    qcountCmd->add_flag("--census", census, "include per-support orbit detail");

    auto* qhitCmd = app.add_subcommand("qhit", "q-hit numbers at a prime power");
    qhitCmd->add_option("board", boardFile, "board file")->required();
    qhitCmd->add_option("--q", q, "prime power")->required();
    qhitCmd->add_option("--k", singleK, "print H_k only");

    auto* residueCmd = app.add_subcommand("residue", "fit residue coefficients mod (q-1)^k");
    residueCmd->add_option("board", boardFile, "board file")->required();
    residueCmd->add_option("--target", target, "qrook or qhit")
        ->check(CLI::IsMember({"qrook", "qhit"}));
    residueCmd->add_option("--d", d, "rank / hit index")->required();
    residueCmd->add_option("--k", k, "residue modulus exponent");

    auto* verifyCmd = app.add_subcommand("verify", "run a named verification suite");
    verifyCmd->add_option("--suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember(suite_names()));

    auto* searchCmd = app.add_subcommand("search", "sweep boards for residue anomalies");
    searchCmd->add_option("--max-m", maxM, "largest row count");
    searchCmd->add_option("--max-n", maxN, "largest column count");
    searchCmd->add_option("--k", k, "residue modulus exponent");
    searchCmd->add_option("--state", stateFile, "checkpoint file for resumption");
    searchCmd->add_option("--stop-after", stopAfter,
                          "stop after N boards (testing aid; exit code 3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rookCmd->parsed()) return cmd_rook(boardFile, genPattern, i, hit, flags);
        if (qcountCmd->parsed()) return cmd_qcount(boardFile, q, method, census, flags);
        if (qhitCmd->parsed()) return cmd_qhit(boardFile, q, singleK, flags);
        if (residueCmd->parsed()) return cmd_residue(boardFile, target, d, k, flags);
        if (verifyCmd->parsed()) return cmd_verify(suite, flags);
        if (searchCmd->parsed())
            return cmd_search(maxM, maxN, k, stateFile, stopAfter, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
