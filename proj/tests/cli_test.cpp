#include "qhgr/cli.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <sstream>

namespace qhgr {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "dubrovin");
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "dubrovin");
  std::ostringstream out;
  auto c = parse_command_line(static_cast<int>(args.size()), args.data(), out);
  if (!c) throw std::runtime_error("help");
  return *c;
}

const Engine& engine() {
  static const Engine e(2);
  return e;
}

TEST(ParseCommandLine, Defaults) {
  RunConfig c = parse({"spectrum"});
  EXPECT_EQ(c.command, Command::Spectrum);
  EXPECT_FALSE(c.cycle.has_value());
  EXPECT_EQ(c.alpha, 2u);
  EXPECT_EQ(c.q, Complex(1.0));
  EXPECT_EQ(c.t, Complex(0.0));
  EXPECT_EQ(c.format, Format::Text);
  EXPECT_EQ(parse({"serve"}).port, 8080);
  EXPECT_EQ(parse({"sweep", "--cycle", "2,2"}).path, figure_path());
}

TEST(ParseCommandLine, Values) {
  RunConfig c = parse({"sweep", "--cycle", "2,1", "--path", "1;2i", "--q", "0.5,0.5", "--alpha", "3", "--format", "csv"});
  EXPECT_EQ(c.cycle, YoungDiagram22(2, 1));
  EXPECT_EQ(c.path, (std::vector<Complex>{{1, 0}, {0, 2}}));
  EXPECT_EQ(c.q, Complex(0.5, 0.5));
  EXPECT_EQ(c.alpha, 3u);
  EXPECT_EQ(c.format, Format::Csv);
  EXPECT_EQ(parse({"serve", "--port", "0"}).port, 0);
}

TEST(ParseCommandLine, UsageErrorsNameTheFlag) {
  auto message = [](std::vector<const char*> args) {
    try {
      parse(std::move(args));
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message({"matrix", "--alpha", "-1"}).find("--alpha"), std::string::npos);
  EXPECT_NE(message({"matrix", "--alpha", "two"}).find("--alpha"), std::string::npos);
  EXPECT_NE(message({"matrix", "--cycle", "1,0"}).find("--cycle"), std::string::npos);
  EXPECT_NE(message({"classify"}).find("--cycle"), std::string::npos);
  EXPECT_NE(message({"spectrum", "--t", "1"}).find("--t"), std::string::npos);
  EXPECT_NE(message({"spectrum", "--format", "xml"}).find("--format"), std::string::npos);
  EXPECT_NE(message({"matrix", "--format", "csv"}).find("--format"), std::string::npos);
  EXPECT_NE(message({"serve", "--port", "65536"}).find("--port"), std::string::npos);
  EXPECT_NE(message({"gw-table", "--max-degree", "0"}).find("--max-degree"), std::string::npos);
  EXPECT_NE(message({"matrix", "--bogus"}), "no error");
  EXPECT_NE(message({}), "no error");
}

TEST(MainEntry, ExitCodes) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"matrix", "--alpha", "-1"}).code, kExitUsage);
  Outcome beyond = invoke({"matrix", "--alpha", "5"});
  EXPECT_EQ(beyond.code, kExitComputation);
  EXPECT_NE(beyond.err.find("alpha = 5"), std::string::npos);
  EXPECT_TRUE(beyond.out.empty());
}

TEST(MainEntry, GWTableText) {
  Outcome o = invoke({"gw-table"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("N(3,2,0,0)"), std::string::npos);
  EXPECT_NE(o.out.find("N(0,0,1,1)"), std::string::npos);
}

TEST(MainEntry, JsonMatchesTheServiceByteForByte) {
  Outcome spectrum = invoke({"spectrum", "--cycle", "1,1", "--t", "0.5+1i", "--format", "json"});
  ASSERT_EQ(spectrum.code, 0) << spectrum.err;
  EXPECT_EQ(spectrum.out, handle(engine(), "/api/spectrum", {{"cycle", "1,1"}, {"t_re", "0.5"}, {"t_im", "1"}}).body);

  Outcome sweep = invoke({"sweep", "--cycle", "2,1", "--format", "json"});
  ASSERT_EQ(sweep.code, 0) << sweep.err;
  EXPECT_EQ(sweep.out, handle(engine(), "/api/sweep", {{"cycle", "2,1"}}).body);
}

TEST(MainEntry, ClassifyAndDiscriminant) {
  Outcome c = invoke({"classify", "--cycle", "2,1", "--format", "json"});
  ASSERT_EQ(c.code, 0) << c.err;
  Json j = Json::parse(c.out);
  EXPECT_EQ(j["verdict"], "TRUNCATION_NONSIMPLE");
  EXPECT_TRUE(j["valuation"].is_null());

  Outcome d = invoke({"discriminant", "--cycle", "2,2"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("TRUNCATION_SIMPLE"), std::string::npos);
  EXPECT_NE(d.out.find("1888946593147858085478400"), std::string::npos);
}

TEST(MainEntry, MatrixJsonCarriesTheCycle) {
  Outcome m = invoke({"matrix", "--cycle", "2,0", "--format", "json"});
  ASSERT_EQ(m.code, 0) << m.err;
  Json j = Json::parse(m.out);
  EXPECT_EQ(j["cycle"], "2,0");
  EXPECT_EQ(j["entries"][3][3]["text"], "1/6t2^3q");
}

#ifdef DUBROVIN_BINARY
std::pair<int, std::string> run_binary(const std::string& args) {
  std::string cmd = std::string("\"") + DUBROVIN_BINARY + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Binary, RunsAsASubprocess) {
  auto [code, out] = run_binary("gw-table --format json");
  ASSERT_EQ(code, 0);
  Json j = Json::parse(out);
  EXPECT_EQ(j["entries"].size(), 16u);
  EXPECT_EQ(run_binary("spectrum --format xml").first, kExitUsage);
  EXPECT_EQ(run_binary("matrix --alpha 4").first, kExitComputation);
}
#endif

}  // namespace
}  // namespace qhgr
