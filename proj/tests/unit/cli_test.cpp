#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "file_io.hpp"
#include "layered/forward.hpp"
#include "support/inversion_helpers.hpp"

namespace layered::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "layered");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("layered_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto path = (dir_ / name).string();
        std::ofstream(path) << text;
        return path;
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string read(const std::string& path) {
        std::ifstream in(path);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    fs::path dir_;
};

TEST_F(CliTest, ForwardWritesTrain) {
    const auto medium = write("m.json", R"({"tau": [1.0, 1.4142135623730951], "R": [0.3, 0.5]})");
    const auto r = invoke({"forward", medium, "--cutoff", "2.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const auto train = parse_train(in);
    ASSERT_EQ(train.size(), 2u);
    EXPECT_NEAR(train[1].amplitude, 0.455, 1e-15);
}

TEST_F(CliTest, ExitCodes) {
    const auto bad = write("bad.json", R"({"tau": [1.0, 1.0], "R": [0.3, 1.5]})");
    const auto r = invoke({"forward", bad, "--cutoff", "3"});
    EXPECT_EQ(r.code, kExitValidation);
    EXPECT_NE(r.err.find("R[1]"), std::string::npos) << r.err;

    EXPECT_EQ(invoke({"forward"}).code, kExitValidation);
    EXPECT_EQ(invoke({"nonsense"}).code, kExitValidation);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);

    const auto dense = write("dense.json", R"({"tau": [0.1, 0.11, 0.13], "R": [0.3, 0.2, 0.1]})");
    EXPECT_EQ(invoke({"forward", dense, "--cutoff", "100", "--max-points", "1000"}).code, kExitResource);

    const auto train = write("t.csv", "time,amplitude\n1,0.3\n2,0.1\n3,0.05\n");
    EXPECT_EQ(invoke({"invert", train}).code, kExitInversion);

    const auto unsorted = write("u.csv", "time,amplitude\n2,0.3\n1,0.1\n");
    EXPECT_EQ(invoke({"invert", unsorted}).code, kExitValidation);

    const auto ok = write("ok.json", R"({"tau": [1.0], "R": [0.3]})");
    EXPECT_EQ(invoke({"spectrum", ok, "--omega-max", "10", "--samples", "0"}).code, kExitValidation);
}

TEST_F(CliTest, SpectrumWithPerfectReflector) {
    const auto medium = write("m.json", R"({"tau": [1.0, 0.7], "R": [0.3, 1.0]})");
    const auto r = invoke({"spectrum", medium, "--omega-max", "20", "--samples", "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "omega,re,im,abs");
    int rows = 0;
    while (std::getline(in, line)) {
        const double abs_value = std::stod(line.substr(line.rfind(',') + 1));
        EXPECT_NEAR(abs_value, 1.0, 1e-12) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 64);
}

TEST_F(CliTest, InvertRoundTrip) {
    const Medium m = make_medium({std::sqrt(0.37), std::sqrt(0.71), std::sqrt(0.29), std::sqrt(0.53)}, {0.3, -0.5, 0.2, 0.45});
    const auto medium = write("m.json", medium_to_json(m));
    const auto train = path("train.csv");
    const auto cutoff = format_double(testing::inversion_cutoff(m.travel_times));
    ASSERT_EQ(invoke({"forward", medium, "--cutoff", cutoff, "--out", train}).code, 0);
    const auto recovered = path("recovered.json");
    const auto r = invoke({"invert", train, "--out", recovered});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("status: consistent"), std::string::npos) << r.out;
    const Medium back = parse_medium(read(recovered));
    ASSERT_EQ(back.reflection.size(), 4u);
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_NEAR(back.reflection[j], m.reflection[j], 1e-10);
        EXPECT_NEAR(back.travel_times[j], m.travel_times[j], 1e-12);
    }
}

TEST_F(CliTest, InvertNonGeneric) {
    const auto medium = write("m.json", R"({"tau": [1.0, 1.0], "R": [0.3, 0.5]})");
    const auto train = path("train.csv");
    ASSERT_EQ(invoke({"forward", medium, "--cutoff", "6", "--out", train}).code, 0);
    const auto r = invoke({"invert", train});
    EXPECT_EQ(r.code, kExitInversion);
    EXPECT_NE(r.err.find("non-generic travel times"), std::string::npos) << r.err;
}

TEST_F(CliTest, InvertReportsDiscrepancy) {
    const Medium m = make_medium({0.4472135954999579, 0.6324555320336759, 0.7745966692414834}, {0.3, -0.5, 0.2});
    auto train = reflection_response(m, 8.0);
    std::vector<Event> events = train.events();
    for (Event& e : events) {
        if (times_coincide(e.time, m.travel_times[0] + m.travel_times[1])) {
            e.amplitude *= 1.01;
        }
    }
    std::ostringstream csv;
    write_train(csv, DeltaTrain::from_sorted(events));
    const auto r = invoke({"invert", write("t.csv", csv.str())});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("DISCREPANCY, kept seven-points"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("status: discrepancy at interface 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateOutputs) {
    const auto zero = write("zero.json", R"({"tau": [1.0, 0.6], "R": [0.0, 0.0], "tau_last": 1.0})");
    const auto z = invoke({"validate", zero, "--cutoff", "10", "--samples", "256"});
    ASSERT_EQ(z.code, 0) << z.err;
    EXPECT_NE(z.out.find("reflected 0, transmitted 1, residual 0"), std::string::npos) << z.out;
    EXPECT_NE(z.out.find("flatness: 1 "), std::string::npos) << z.out;

    const auto two = write("two.json", R"({"tau": [1.0, 1.4142135623730951], "R": [0.3, 0.5], "tau_last": 0.8})");
    const auto t = invoke({"validate", two, "--cutoff", "8", "--samples", "256"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_NE(t.out.find("oracle: PASS"), std::string::npos) << t.out;

    const auto five = write("five.json", R"({"tau": [1, 0.9, 0.8, 0.7, 0.6, 0.55], "R": [0.1, 0.1, 0.1, 0.1, 0.1, 0.1]})");
    const auto f = invoke({"validate", five, "--cutoff", "5", "--samples", "64"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_NE(f.out.find("oracle: skipped (n>3)"), std::string::npos) << f.out;
    EXPECT_NE(f.out.find("energy: skipped"), std::string::npos) << f.out;
}

TEST_F(CliTest, Deterministic) {
    const auto medium = write("m.json", R"({"tau": [1.0, 0.7], "R": [0.3, -0.4], "tau_last": 0.9})");
    const std::vector<std::string> args{"validate", medium, "--cutoff", "6", "--samples", "128", "--jitter", "0.3",
                                        "--seed", "7"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    const std::vector<std::string> fwd{"forward", medium, "--cutoff", "9", "--transmission"};
    EXPECT_EQ(invoke(fwd).out, invoke(fwd).out);
}

TEST_F(CliTest, OracleIsHidden) {
    const auto help = invoke({"--help"});
    EXPECT_EQ(help.out.find("oracle"), std::string::npos);
    const auto medium = write("m.json", R"({"tau": [1.0, 0.7], "R": [0.4, 0.25]})");
    const auto r = invoke({"oracle", medium, "--cutoff", "2.4"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    EXPECT_EQ(parse_train(in).size(), 3u);
}

}  // namespace
}  // namespace layered::cli
