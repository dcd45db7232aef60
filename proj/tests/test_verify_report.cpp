#include <doctest.h>

#include "motive_forge/error.hpp"
#include "motive_forge/report_io.hpp"
#include "motive_forge/verify.hpp"

using namespace motive_forge;

TEST_CASE("identity_test on identical and different classes") {
    const auto spec = ModuliSpec::from_p(2, 2, 1, 1);
    const ClassBuilder m = motive_builder(spec);
    const auto same = identity_test(m, m, 2, 5, 9);
    CHECK(same.passed());
    CHECK(same.hodge_run);
    CHECK(same.weil_trials == 5);

    const ClassBuilder shifted{
        [&](const WeilEnvironment& e) { return m.weil(e) * e.lefschetz; },
        [&](const HodgeEnvironment& e) { return m.hodge(e) * e.lefschetz; },
    };
    const auto diff = identity_test(m, shifted, 2, 5, 9);
    CHECK_FALSE(diff.passed());
    CHECK(diff.weil_failures == 5);
    REQUIRE(diff.first_failing_seed.has_value());
    CHECK(*diff.first_failing_seed == trial_seed(9, 0));
    CHECK_FALSE(diff.hodge_equal);

    const auto skip = identity_test(m, m, 2, 2, 9, 1);
    CHECK_FALSE(skip.hodge_run);
    CHECK(skip.passed());
}

TEST_CASE("duality passes identity_test") {
    const auto r = identity_test(motive_builder(ModuliSpec::from_p(2, 3, 1, 1)),
                                 motive_builder(ModuliSpec::from_p(2, 3, -1, 1)), 2, 10, 4);
    CHECK(r.passed());
}

TEST_CASE("builder errors name the environment") {
    const ClassBuilder boom{
        [](const WeilEnvironment&) -> BigRational { throw Error(ErrorKind::NotDivisible, "boom"); },
        [](const HodgeEnvironment&) -> UVLaurent { throw Error(ErrorKind::NotDivisible, "boom"); },
    };
    try {
        identity_test(boom, boom, 2, 1, 3);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDivisible);
        CHECK(std::string(e.what()).find("weil seed " + std::to_string(trial_seed(3, 0))) != std::string::npos);
    }
}

TEST_CASE("grid expansion and determinism") {
    GridOptions o;
    o.genera = {3, 2};
    o.ranks = {1, 2, 3};
    o.degrees = {2, 1};
    o.ps = {1};
    o.trials = 3;
    o.seed = 5;
    o.threads = 3;
    const auto cells = expand_grid(o);
    // (r, d) = (2, 2) is dropped
    CHECK(cells.size() == 2 * 5);
    CHECK(cells.front().g == 2);
    CHECK(cells.front().r == 1);
    for (const auto& c : cells) CHECK(std::gcd(c.r, c.d) == 1);

    o.genera = {2};
    o.ranks = {1, 2};
    o.degrees = {1};
    const auto a = run_adhm_grid(o);
    o.threads = 1;
    const auto b = run_adhm_grid(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].passed());
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].cell.r == b[i].cell.r);
    }
    CHECK(cell_seed(5, cells[0]) != cell_seed(6, cells[0]));
}

TEST_CASE("thread count resolution") {
    CHECK(resolve_thread_count(4) == 4);
    CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("integer lists") {
    CHECK(parse_int_list("3") == std::vector<int>{3});
    CHECK(parse_int_list("1..4") == std::vector<int>{1, 2, 3, 4});
    CHECK(parse_int_list("-1..1,5") == std::vector<int>{-1, 0, 1, 5});
    CHECK(parse_int_list(" 2 , 7") == std::vector<int>{2, 7});
    for (const char* bad : {"", "a", "3..1", "1,,2", "1..", "2.5"}) {
        try {
            parse_int_list(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
}

TEST_CASE("report rendering") {
    VerificationReport r;
    r.cell = {2, 2, 1, 1};
    r.hodge_run = true;
    r.hodge_equal = true;
    r.weil_trials = 20;
    r.seed = 123;
    RunMetadata meta;
    meta.seed = 7;
    const auto j = reports_json({r}, meta);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["all_passed"] == true);
    CHECK(j["cells"][0]["dL"] == -3);
    CHECK(j["cells"][0]["first_failing_seed"].is_null());

    const std::string csv = render_reports({r}, meta, Format::csv);
    CHECK(csv.find("2,2,1,1,-3,123,1,1,20,0,1,") != std::string::npos);
    const std::string tex = render_reports({r}, meta, Format::latex);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("pass") != std::string::npos);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("latex rendering of values") {
    const UVLaurent u = UVLaurent::u(), v = UVLaurent::v();
    CHECK(latex_polynomial(u * v - u * BigRational(2) + UVLaurent(BigRational(1, 2))) == "u v - 2 u + \\frac{1}{2}");
    CHECK(latex_rational(BigRational(-3, 4)) == "-\\frac{3}{4}");
    CHECK(latex_legend(make_hodge_env(2)).find("\\mathbb{L} = uv") == 0);
    const auto w = make_weil_env(2, 3);
    const auto env = environment_json(w);
    CHECK(env["seed"] == 3);
    CHECK(env["betas"].size() == 4);
    CHECK(environment_json(make_hodge_env(2))["seed"].is_null());
}
