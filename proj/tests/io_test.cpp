#include "random_inputs.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace dslice;
using dslice::testing::Rng;

namespace {

TEST(Io, MatrixRoundTrip) {
    for (const auto& [name, m] : builtin_matrices()) {
        auto back = matrix_from_json(matrix_to_json(name, m));
        EXPECT_EQ(back.name, name);
        EXPECT_EQ(back.matrix, m);
    }
    EXPECT_THROW(matrix_from_json(json{{"name", "x"}, {"epsilon", 2}, {"rows", {{1}}}}), Error);
    EXPECT_THROW(matrix_from_json(json{{"name", "x"}, {"epsilon", 1}, {"rows", {{1, 2}}}}), Error);
}

TEST(Io, ResolveMatrix) {
    EXPECT_EQ(resolve_matrix("8_20"), builtin_matrix("8_20"));
    EXPECT_EQ(resolve_matrix("8_20#8_20").size(), 8u);
    EXPECT_EQ(resolve_matrix("[[0,1],[0,0]]"), SeifertMatrix(IntMatrix{{0, 1}, {0, 0}}, -1));
    EXPECT_EQ(resolve_matrix("[[1]]", 1).epsilon(), 1);
    EXPECT_EQ(resolve_matrix("evenq_example", -1).epsilon(), -1);
    EXPECT_THROW(resolve_matrix("no_such_knot"), Error);

    auto path = std::filesystem::temp_directory_path() / "dslice_io_test_matrix.json";
    std::ofstream(path) << matrix_to_json("custom", builtin_matrix("trefoil")).dump();
    EXPECT_EQ(resolve_matrix(path.string()), builtin_matrix("trefoil"));
    std::filesystem::remove(path);
}

TEST(Io, PresentationRoundTrip) {
    for (long p = 1; p <= 3; ++p) {
        auto pres = pretzel_presentation({p, 2 * p + 1});
        auto back = presentation_from_json(presentation_to_json(pres));
        EXPECT_EQ(back, pres);
        EXPECT_EQ(longitude_obstruction(back), longitude_obstruction(pres));
    }
    json bad = presentation_to_json(pretzel_presentation({1, 1}));
    bad["relators"][0]["word"] = "a a";  // not null-homologous
    EXPECT_THROW(presentation_from_json(bad), Error);
}

TEST(Io, ReportRoundTrips) {
    for (long n : {1, 6}) {
        auto r = longitude_obstruction(pretzel_presentation({1, n}));
        EXPECT_EQ(obstruction_report_from_json(to_json(r)), r);
    }
    for (const auto& name : {"8_20", "evenq_example", "trefoil"}) {
        const auto& m = builtin_matrix(name);
        auto prof = signature_profile(m);
        auto back = signature_profile_from_json(to_json(prof));
        EXPECT_EQ(to_json(back), to_json(prof));
        auto cert = hyperbolic_obstruction(m, auto_test_set(prof));
        EXPECT_EQ(to_json(hyperbolic_certificate_from_json(to_json(cert))), to_json(cert));
        auto b = bing_double_ds_bound(m, auto_test_set(prof));
        EXPECT_EQ(to_json(ds_bound_from_json(to_json(b))), to_json(b));
    }
    auto l = Sublattice::from_vectors(4, {{1, -1, 0, 0}, {0, 0, 0, 1}});
    EXPECT_EQ(sublattice_from_json(sublattice_to_json(l)), l);
}

TEST(Io, RationalParsing) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
}

}  // namespace
