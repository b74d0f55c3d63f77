// Integration checks for the nerve-bounds binary (path given as argv[1]):
// determinism of reports, exit codes, and JSON schema of every subcommand.
#include "nb/cell_complex.hpp"

#include "support/family_corpus.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

int checks = 0;
int failed = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failed;
        std::cerr << "FAILED: " << what << "\n";
    }
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-nerve-bounds>\n";
        return 2;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";
    const fs::path dir =
        fs::temp_directory_path() / ("nerve-bounds-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    // construct: deterministic byte-identical reports, valid schema
    const fs::path rep1 = dir / "c1.json";
    const fs::path rep2 = dir / "c2.json";
    const fs::path family_file = dir / "family6.json";
    const fs::path family_svg = dir / "family6.svg";
    auto c1 = run(bin + " construct --n 6 --out " + rep1.string() + " --family-out " +
                  family_file.string() + " --family-svg " + family_svg.string());
    auto c2 = run(bin + " construct --n 6 --out " + rep2.string());
    expect(c1.status == 0, "construct exits 0");
    expect(c2.status == 0, "second construct exits 0");
    const std::string body1 = slurp(rep1);
    expect(!body1.empty() && body1 == slurp(rep2), "construct reports byte-identical");
    const Json creport = Json::parse(body1);
    expect(creport.at("schema") == "nerve-bounds/1", "construct schema tag");
    expect(creport.at("nerve").at("f_vector") == Json::array({6, 15, 13, 0}),
           "construct f-vector");
    expect(slurp(family_svg).rfind("<svg", 0) == 0, "family svg starts with <svg");

    // stdout path "-"
    auto cstdout = run(bin + " construct --n 6 --out -");
    expect(cstdout.status == 0 && Json::parse(cstdout.out).at("schema") == "nerve-bounds/1",
           "construct writes report to stdout");

    // verify: the emitted family file round-trips through the checker
    auto v1 = run(bin + " verify --family " + family_file.string() + " --k 2 --b 1 --out -");
    expect(v1.status == 0, "verify exits 0 on the constructed family");
    const Json vreport = Json::parse(v1.out);
    expect(vreport.at("pass") == true, "verify pass flag");
    expect(vreport.at("bound").at("satisfied") == true, "verify bound satisfied");
    auto v2 = run(bin + " verify --family " + family_file.string() +
                  " --k 2 --b 1 --chi 2 --out -");
    expect(v2.status == 0 && Json::parse(v2.out).at("bound").at("chi") == 2,
           "verify honors --chi");
    auto v3 = run(bin + " verify --family " + dir.string() + "/missing.json --k 2 --out -");
    expect(v3.status == 3, "verify exits 3 on a missing family file");

    // hypothesis violation (four sets through one point) flips the exit code
    nb::RegionFamily concurrent;
    concurrent.complex = nbtest::path_complex(1);
    concurrent.names = {"A1", "A2", "A3", "A4"};
    concurrent.sets = {{0}, {0}, {0}, {0}};
    const fs::path bad_family = dir / "concurrent.json";
    write_file(bad_family, nb::family_to_json(concurrent));
    auto v4 = run(bin + " verify --family " + bad_family.string() + " --k 2 --b 1 --out -");
    expect(v4.status == 1, "verify exits 1 when the hypotheses fail");
    expect(Json::parse(v4.out).at("pass") == false, "failing verify reports pass=false");

    // a split intersection exceeds the component budget: hard error, exit 3
    nb::RegionFamily split;
    split.complex = nbtest::path_complex(3);
    split.names = {"A1", "A2", "A3"};
    split.sets = {{0, 2}, {0, 2}, {0, 2}};
    const fs::path split_family = dir / "split.json";
    write_file(split_family, nb::family_to_json(split));
    auto v5 = run(bin + " verify --family " + split_family.string() + " --k 2 --b 1 --out -");
    expect(v5.status == 3, "verify exits 3 when witnesses cannot be chosen");

    // lemmas: exhaustive counts at vmax 4
    auto l1 = run(bin + " lemmas --vmax 4 --out -");
    expect(l1.status == 0, "lemmas exits 0");
    const Json lreport = Json::parse(l1.out);
    expect(lreport.at("graphs") == 44, "lemmas graph count at vmax=4");
    expect(lreport.at("observation_failures") == 0 &&
               lreport.at("decomposition_failures") == 0,
           "lemmas reports zero failures");

    // arrangement: simple input passes, duplicate lines exit 1
    const fs::path lines_ok = dir / "lines.txt";
    write_file(lines_ok, "0 1 0\n1 0 0\n1 1 2\n");
    auto a1 = run(bin + " arrangement --lines " + lines_ok.string() + " --projective --out -");
    expect(a1.status == 0, "arrangement exits 0 on simple lines");
    const Json areport = Json::parse(a1.out);
    expect(areport.at("crossings") == 3, "arrangement crossing count");
    expect(areport.at("projective_faces") == 4, "projective face identity");

    const fs::path lines_dup = dir / "dup.txt";
    write_file(lines_dup, "0 1 0\n0 1 0\n1 0 0\n");
    auto a2 = run(bin + " arrangement --lines " + lines_dup.string() + " --out -");
    expect(a2.status == 1, "arrangement exits 1 on duplicate lines");
    expect(Json::parse(a2.out).at("simplicity").at("simple") == false,
           "simplicity report emitted");

    // unknown subcommand is a usage error
    auto bad = run(bin + " frobnicate");
    expect(bad.status != 0, "unknown subcommand rejected");

    fs::remove_all(dir);
    std::cout << checks - failed << "/" << checks << " cli checks passed\n";
    return failed == 0 ? 0 : 1;
}
