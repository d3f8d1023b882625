// Exit-code and determinism contract for the ttk binary, driven end to end
// through a shell.  argv[1] must be the path to the built binary.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;
std::string g_bin;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAIL: " << what << "\n";
    ++g_failures;
  }
}

void expect_exit(const std::string& args, int code) {
  const RunResult res = run(args);
  expect(res.exit_code == code,
         "`" + args + "` exits " + std::to_string(code) + " (got " +
             std::to_string(res.exit_code) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-ttk-binary>\n";
    return 2;
  }
  g_bin = argv[1];

  // success paths
  expect_exit("info 3 2 2 1", 0);
  expect_exit("info 2593 3889 1296 46675", 0);  // formula-driven stats
  expect_exit("braid 2 3 0 0 --format text", 0);
  expect_exit("invariants 2 3 0 0", 0);
  expect_exit("invariants --word 's:2 w:1 1 1'", 0);
  expect_exit("certify-gaps 3 1 1 2 3 1 1", 0);
  expect_exit("enumerate berge --m 2..3 --n 1..5", 0);
  expect_exit("enumerate dean1 --m 2 --n 3..4", 0);
  expect_exit("oracle torus --max-pq 5 --max-f 1", 0);
  expect_exit("oracle all --max-pq 4 --max-f 1 --samples 8 --max-crossings 12",
              0);

  // content spot checks
  {
    const RunResult info = run("info 5 7 1 3 --format json");
    expect(info.out.find("\"exact\": 5") != std::string::npos,
           "info reports exact b0 = 5 for the torus regime");
    expect(info.out.find("torus-regime-genus-one") != std::string::npos,
           "info carries the torus-regime flag");
    const RunResult div = run("info 6 7 3 9 --format json");
    expect(div.out.find("\"link_status\": \"unknown\"") != std::string::npos,
           "info 6 7 3 9 leaves link hyperbolicity unknown");
    const RunResult slope = run("info 3 2 2 1 --format json");
    expect(slope.out.find("\"surface_slope\": 10") != std::string::npos,
           "info reports surface slope 10");
    // dean1 members are primitive on one side only; the constraint check
    // column (9th field) must still be true on every row
    const RunResult dean = run("enumerate dean1 --m 2 --n 3..4");
    std::istringstream lines(dean.out);
    std::string line;
    std::getline(lines, line);  // header
    bool constraints_true = true;
    int dean_rows = 0;
    while (std::getline(lines, line)) {
      ++dean_rows;
      int field = 0;
      std::size_t start = 0;
      std::string value;
      for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
          if (field == 8) value = line.substr(start, i - start);
          ++field;
          start = i + 1;
        }
      }
      constraints_true = constraints_true && value == "true";
    }
    expect(dean_rows == 2 && constraints_true,
           "dean1 rows have the constraint-check column true");
  }

  // braid emission cap guards absurd words
  expect_exit("braid 2593 3889 1296 46675", 2);
  expect_exit("invariants 2593 3889 1296 46675", 2);
  // statistics that would wrap 64 bits fail cleanly
  expect_exit("info 1000000007 1000000009 999999999 1000000000", 2);

  // input errors -> 2
  expect_exit("info 4 6 0 0", 2);            // gcd
  expect_exit("info 3 2 9 1", 2);            // r > p
  expect_exit("certify-gaps 3 1 1 3 2 1 1", 2);  // d < c pair
  expect_exit("certify-gaps 0 1 1 2 3 1 1", 2);  // C must be positive
  expect_exit("enumerate berge --m 2 --n 0..0", 2);
  expect_exit("enumerate dean2 --m 2 --n 2..3", 2);  // missing --l
  expect_exit("nonsense-command", 2);
  expect_exit("info 3 2 2 1 --format csv", 2);
  expect_exit("validate /nonexistent/path.json", 2);

  // deterministic byte-identical output
  {
    const RunResult a = run("certify-gaps 2 1 1 2 3 1 1");
    const RunResult b = run("certify-gaps 2 1 1 2 3 1 1");
    expect(a.exit_code == 0 && a.out == b.out && !a.out.empty(),
           "identical invocations give byte-identical certificates");
    const RunResult i1 = run("info 7 9 4 6");
    const RunResult i2 = run("info 7 9 4 6");
    expect(i1.out == i2.out && !i1.out.empty(), "info output deterministic");
  }

  // certify -> validate round trip
  {
    const std::string cert = "/tmp/ttk_cli_cert.json";
    const RunResult gen =
        run("certify-gaps 3 1 1 2 3 1 1 --out " + cert);
    expect(gen.exit_code == 0, "certificate written to file");
    expect_exit("validate " + cert, 0);

    // tampered b0 -> exit 1, naming the field
    std::ifstream in(cert);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string doc = ss.str();
    const std::string needle = "\"b0\": 2593";
    const auto pos = doc.find(needle);
    expect(pos != std::string::npos, "certificate contains b0 = 2593");
    doc.replace(pos, needle.size(), "\"b0\": 2594");
    const std::string tampered = "/tmp/ttk_cli_tampered.json";
    std::ofstream(tampered) << doc;
    const RunResult bad = run("validate " + tampered);
    expect(bad.exit_code == 1, "tampered certificate exits 1");
    expect(bad.out.find("b0") != std::string::npos,
           "mismatch names the b0 field");

    // |s| = 18p exactly -> exit 1 (strict threshold)
    std::string strict = ss.str();
    const std::string s_needle = "\"s\": 46675";
    // replace both the top-level s and the params entry
    std::string strict_doc = strict;
    std::size_t at = 0;
    int replaced = 0;
    while ((at = strict_doc.find("46675", at)) != std::string::npos) {
      strict_doc.replace(at, 5, "46674");
      ++replaced;
      at += 5;
    }
    expect(replaced >= 2, "threshold fixture rewrote s occurrences");
    const std::string strict_path = "/tmp/ttk_cli_strict.json";
    std::ofstream(strict_path) << strict_doc;
    expect_exit("validate " + strict_path, 1);
    (void)s_needle;

    // malformed JSON -> exit 2
    const std::string broken = "/tmp/ttk_cli_broken.json";
    std::ofstream(broken) << "{not json";
    expect_exit("validate " + broken, 2);
  }

  // enumerate output: header + 10 rows for m 2..3, n 1..5
  {
    const RunResult rows = run("enumerate berge --m 2..3 --n 1..5");
    int lines = 0;
    for (char ch : rows.out)
      if (ch == '\n') ++lines;
    expect(lines == 11, "berge 2..3 x 1..5 gives a header and 10 rows (got " +
                            std::to_string(lines) + " lines)");
    expect(rows.out.find("false") == std::string::npos,
           "all berge rows verify doubly-primitive");
  }

  // search-bound exhaustion -> exit 1
  expect_exit("certify-gaps 3 1 1 2 3 1 1 --search-bound 100", 1);

  // env var override is honored (tiny bound forces the same failure)
  {
    const std::string cmd = "TTK_SEARCH_BOUND=100 " + g_bin +
                            " certify-gaps 3 1 1 2 3 1 1 >/dev/null 2>&1; "
                            "echo $?";
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[16] = {0};
    if (pipe) {
      if (!fgets(buf, sizeof buf, pipe)) buf[0] = 0;
      pclose(pipe);
    }
    expect(std::string(buf).find('1') == 0, "TTK_SEARCH_BOUND env respected");
  }

  if (g_failures) {
    std::cout << g_failures << " cli check(s) failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
