#include <cstdlib>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "harmonet/cli.hpp"
#include "harmonet/gaussian.hpp"
#include "harmonet/graphs.hpp"

using namespace harmonet;

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    return fields;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

// Column index lookup from the header row.
std::map<std::string, int> header_index(const std::string& header) {
    std::map<std::string, int> idx;
    const auto cols = fields_of(header);
    for (int k = 0; k < static_cast<int>(cols.size()); ++k) idx[cols[k]] = k;
    return idx;
}

}  // namespace

TEST_SUITE("cli") {

    TEST_CASE("eof emits one well-formed record") {
        const CliResult r = run_cli({"eof", "tetrahedron", "--omega", "10000", "--pair", "0,1"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 2);
        CHECK(lines[0] == "graph,omega,temperature,i,j,delta,eof_ebits,eof_centi_ebits");

        const auto f = fields_of(lines[1]);
        REQUIRE(f.size() == 8);
        CHECK(f[0] == "tetrahedron");
        CHECK(num(f[1]) == 10000.0);
        CHECK(num(f[2]) == 0.0);
        CHECK(f[3] == "0");
        CHECK(f[4] == "1");
        CHECK(std::abs(num(f[7]) - 19.74) <= 0.05);
        CHECK(num(f[7]) == doctest::Approx(100.0 * num(f[6])).epsilon(1e-15));
    }

    TEST_CASE("separable pairs print an exact zero") {
        const CliResult far = run_cli({"eof", "ring:11", "--omega", "2", "--pair", "0,5"});
        REQUIRE(far.code == cli::exit_ok);
        CHECK(fields_of(lines_of(far.out)[1])[7] == "0");

        const CliResult uncoupled = run_cli({"eof", "path:2", "--omega", "0"});
        REQUIRE(uncoupled.code == cli::exit_ok);
        CHECK(fields_of(lines_of(uncoupled.out)[1])[6] == "0");
    }

    TEST_CASE("csv numbers round-trip to the exact computed doubles") {
        const CliResult r = run_cli({"eof", "ring:11", "--omega", "2", "--pair", "0,1"});
        REQUIRE(r.code == cli::exit_ok);
        const auto f = fields_of(lines_of(r.out)[1]);

        const EofResult direct = eof_pair(make_ring(11), 2.0, ground_state_beta, 0, 1);
        CHECK(num(f[5]) == direct.delta);        // bit-exact round trip
        CHECK(num(f[6]) == direct.eof);
        CHECK(num(f[7]) == 100.0 * direct.eof);
    }

    TEST_CASE("json output carries the same record") {
        const CliResult r =
            run_cli({"eof", "cube", "--omega", "3", "--temp", "0.2", "--format", "json"});
        REQUIRE(r.code == cli::exit_ok);
        const auto doc = nlohmann::json::parse(r.out);
        REQUIRE(doc.is_array());
        REQUIRE(doc.size() == 1);
        const auto& rec = doc[0];
        CHECK(rec["graph"] == "cube");
        CHECK(rec["omega"].get<double>() == 3.0);
        CHECK(rec["temperature"].get<double>() == 0.2);
        CHECK(rec["i"] == 0);
        CHECK(rec["j"] == 1);

        const EofResult direct = eof_pair(make_platonic(PlatonicSolid::Cube), 3.0, 5.0, 0, 1);
        CHECK(rec["delta"].get<double>() == direct.delta);
        CHECK(rec["eof_ebits"].get<double>() == direct.eof);
    }

    TEST_CASE("identical invocations give byte-identical output") {
        const std::vector<std::vector<std::string>> invocations = {
            {"eof", "icosahedron", "--omega", "7.5"},
            {"sweep", "octahedron", "--omega-range", "0.1:10:7", "--spacing", "geometric"},
            {"threshold", "path:2", "--omega", "2"},
            {"tables", "1"},
        };
        for (const auto& argv : invocations) {
            const CliResult a = run_cli(argv);
            const CliResult b = run_cli(argv);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("omega sweep is monotone for an adjacent pair") {
        const CliResult r =
            run_cli({"sweep", "complete:6", "--pair", "0,1", "--omega-range", "0.1:100:50"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 51);
        double prev = -1.0;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const double eof = num(fields_of(lines[k])[6]);
            CHECK(eof >= prev - 1e-12);
            prev = eof;
        }
    }

    TEST_CASE("temperature sweep decays to zero past the threshold") {
        const CliResult r = run_cli(
            {"sweep", "path:2", "--omega", "1", "--temp-range", "0.05:5:40"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 41);
        CHECK(num(fields_of(lines[1])[6]) > 0.0);                 // cold: entangled
        CHECK(num(fields_of(lines.back())[6]) == 0.0);            // hot: separable
        double prev = 2.0;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const double eof = num(fields_of(lines[k])[6]);
            CHECK(eof <= prev + 1e-12);
            prev = eof;
        }
    }

    TEST_CASE("geometric spacing hits exact decades") {
        const CliResult r = run_cli(
            {"sweep", "path:2", "--omega-range", "0.01:100:5", "--spacing", "geometric"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 6);
        const double expect[] = {0.01, 0.1, 1.0, 10.0, 100.0};
        for (int k = 0; k < 5; ++k)
            CHECK(num(fields_of(lines[k + 1])[1]) == doctest::Approx(expect[k]).epsilon(1e-12));
    }

    TEST_CASE("ring size barely matters at weak coupling") {
        for (const char* omega : {"0.5", "1"}) {
            const CliResult small = run_cli({"eof", "ring:11", "--omega", omega});
            const CliResult large = run_cli({"eof", "ring:201", "--omega", omega});
            REQUIRE(small.code == cli::exit_ok);
            REQUIRE(large.code == cli::exit_ok);
            const double e_small = num(fields_of(lines_of(small.out)[1])[6]);
            const double e_large = num(fields_of(lines_of(large.out)[1])[6]);
            CHECK(std::abs(e_small - e_large) <= 0.005);
        }
    }

    TEST_CASE("sweep argument validation") {
        CHECK(run_cli({"sweep", "path:2"}).code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--omega-range", "1:2:3", "--temp-range", "1:2:3"})
                  .code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--omega-range", "1:2"}).code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--omega-range", "1:2:0"}).code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--omega-range", "1:2:x"}).code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--temp-range", "0.1:2:5"}).code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--omega-range", "0:2:5", "--spacing", "geometric"})
                  .code == cli::exit_usage);
        CHECK(run_cli({"sweep", "path:2", "--omega-range", "1:2:3", "--spacing", "log"}).code ==
              cli::exit_usage);
    }

    TEST_CASE("threshold command") {
        const CliResult r = run_cli({"threshold", "path:2", "--omega", "1"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 2);
        CHECK(lines[0] == "graph,omega,i,j,t_star");
        // frozen from a high-precision root of coth(1/2T) coth(sqrt3/2T) = sqrt3
        CHECK(num(fields_of(lines[1])[4]) ==
              doctest::Approx(0.63390131123896115).epsilon(1e-6));

        const CliResult hotter = run_cli({"threshold", "path:2", "--omega", "4"});
        REQUIRE(hotter.code == cli::exit_ok);
        CHECK(num(fields_of(lines_of(hotter.out)[1])[4]) > num(fields_of(lines[1])[4]));

        CHECK(run_cli({"threshold", "ring:11", "--omega", "2", "--pair", "0,5"}).code ==
              cli::exit_separable);
    }

    TEST_CASE("error paths map to their exit codes") {
        CHECK(run_cli({}).code == cli::exit_usage);
        CHECK(run_cli({"eof"}).code == cli::exit_usage);
        CHECK(run_cli({"eof", "moebius:7", "--omega", "1"}).code == cli::exit_usage);
        CHECK(run_cli({"eof", "path:2", "--omega", "1", "--pair", "0;1"}).code ==
              cli::exit_usage);
        CHECK(run_cli({"eof", "path:2", "--omega", "1", "--pair", "0,7"}).code ==
              cli::exit_usage);
        CHECK(run_cli({"eof", "path:2", "--omega", "1", "--temp", "-1"}).code ==
              cli::exit_usage);
        CHECK(run_cli({"eof", "path:2", "--omega", "1", "--frmt", "csv"}).code ==
              cli::exit_usage);

        // ends vs middle of a chain: inequivalent sites
        const CliResult asym = run_cli({"eof", "path:3", "--omega", "1", "--pair", "0,1"});
        CHECK(asym.code == cli::exit_asymmetric);
        CHECK(asym.err.find("not equivalent") != std::string::npos);

        // numerical: unreachable quadrature tolerance
        CHECK(run_cli({"lattice-inf", "--d", "1", "--omega", "1000", "--tol", "1e-30"}).code ==
              cli::exit_numerical);
    }

    TEST_CASE("help is help, not an error") {
        const CliResult top = run_cli({"--help"});
        CHECK(top.code == cli::exit_ok);
        CHECK(top.out.find("eof") != std::string::npos);
        CHECK(run_cli({"eof", "--help"}).code == cli::exit_ok);
    }

    TEST_CASE("tables 1 reproduces the polyhedra summary") {
        const CliResult r = run_cli({"tables", "1"});
        REQUIRE(r.code == cli::exit_ok);
        CHECK(r.err.find("vertex count") != std::string::npos);  // the alignment note

        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 6);
        const auto idx = header_index(lines[0]);

        std::vector<double> einf, meanfield;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const auto f = fields_of(lines[k]);
            einf.push_back(num(f[idx.at("einf_centi")]));
            meanfield.push_back(num(f[idx.at("meanfield_centi")]));
            CHECK(num(f[idx.at("einf_absdiff")]) <= 0.05);
            CHECK(num(f[idx.at("meanfield_absdiff")]) <= 0.02);
        }
        // row order follows the published table
        const double expect_einf[] = {19.74, 9.80, 9.74, 7.00, 4.51};
        const double expect_mf[] = {19.74, 4.68, 8.30, 0.83, 2.15};  // per vertex count
        for (int k = 0; k < 5; ++k) {
            CHECK(std::abs(einf[k] - expect_einf[k]) <= 0.05);
            CHECK(std::abs(meanfield[k] - expect_mf[k]) <= 0.02);
        }
    }

    TEST_CASE("tables 2 reproduces the distance-resolved values") {
        const CliResult r = run_cli({"tables", "2"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        const auto idx = header_index(lines[0]);

        std::map<std::pair<std::string, int>, double> got;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const auto f = fields_of(lines[k]);
            got[{f[idx.at("polyhedron")], static_cast<int>(num(f[idx.at("distance")]))}] =
                num(f[idx.at("einf_centi")]);
        }
        CHECK(std::abs(got.at({"cube", 1}) - 9.80) <= 0.05);
        CHECK(std::abs(got.at({"cube", 2}) - 1.08) <= 0.05);
        CHECK(std::abs(got.at({"cube", 3}) - 0.24) <= 0.05);
        CHECK(std::abs(got.at({"octahedron", 1}) - 9.74) <= 0.05);
        CHECK(std::abs(got.at({"octahedron", 2}) - 2.58) <= 0.05);
        // beyond nearest neighbours the two larger solids are essentially dark
        for (int d = 2; d <= 5; ++d) CHECK(got.at({"dodecahedron", d}) <= 0.5);
        for (int d = 2; d <= 3; ++d) CHECK(got.at({"icosahedron", d}) <= 0.5);
    }

    TEST_CASE("tables 3 echoes the lattice saturation values") {
        // a softer omega keeps this test quick; saturation is already at hand
        const CliResult r = run_cli({"tables", "3", "--omega-sat", "200", "--tol", "1e-5"});
        REQUIRE(r.code == cli::exit_ok);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 4);
        const auto idx = header_index(lines[0]);
        const double expect_einf[] = {16.34, 3.54, 1.50};
        const double expect_emax[] = {30.0, 6.31, 2.62};
        for (int k = 0; k < 3; ++k) {
            const auto f = fields_of(lines[k + 1]);
            CHECK(num(f[idx.at("d")]) == k + 1);
            CHECK(std::abs(num(f[idx.at("einf_centi")]) - expect_einf[k]) <= 0.10);
            CHECK(num(f[idx.at("emax_ref")]) == expect_emax[k]);
        }
    }

    TEST_CASE("saturation omega obeys the environment override") {
        setenv("HARMONET_OMEGA_SAT", "100", 1);
        const CliResult r = run_cli({"tables", "1"});
        unsetenv("HARMONET_OMEGA_SAT");
        REQUIRE(r.code == cli::exit_ok);

        const auto f = fields_of(lines_of(r.out)[1]);  // tetrahedron row
        const double direct =
            100.0 * eof_pair(make_platonic(PlatonicSolid::Tetrahedron), 100.0,
                             ground_state_beta, 0, 1)
                        .eof;
        CHECK(num(fields_of(lines_of(r.out)[1])[2]) == direct);
        CHECK(f[0] == "tetrahedron");

        setenv("HARMONET_OMEGA_SAT", "banana", 1);
        const CliResult bad = run_cli({"tables", "1"});
        unsetenv("HARMONET_OMEGA_SAT");
        CHECK(bad.code == cli::exit_usage);

        // an explicit flag wins over the environment
        setenv("HARMONET_OMEGA_SAT", "banana", 1);
        const CliResult flag = run_cli({"tables", "1", "--omega-sat", "10000"});
        unsetenv("HARMONET_OMEGA_SAT");
        CHECK(flag.code == cli::exit_ok);
    }

    TEST_CASE("infinite lattice command") {
        const CliResult r = run_cli({"lattice-inf", "--d", "1", "--omega", "1000"});
        REQUIRE(r.code == cli::exit_ok);
        const auto f = fields_of(lines_of(r.out)[1]);
        CHECK(f[0] == "lattice-inf:1");
        CHECK(std::abs(num(f[7]) - 16.34) <= 0.05);

        const CliResult still = run_cli({"lattice-inf", "--d", "2", "--omega", "0"});
        REQUIRE(still.code == cli::exit_ok);
        CHECK(std::abs(num(fields_of(lines_of(still.out)[1])[6])) <= 1e-9);

        CHECK(run_cli({"lattice-inf", "--d", "0", "--omega", "1"}).code == cli::exit_usage);
        CHECK(run_cli({"lattice-inf", "--d", "1", "--omega", "1", "--tol", "-1"}).code ==
              cli::exit_usage);
    }
}
