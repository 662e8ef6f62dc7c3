#include <doctest.h>

#include "klyachko/groupalg.hpp"
#include "klyachko/report.hpp"

using namespace klyachko;

TEST_CASE("mode strings") {
    CHECK(RunOptions::symbolic().mode_string() == "symbolic");
    CHECK(RunOptions::random(20, 7).mode_string() == "randomized(points=20,seed=7)");
}

TEST_CASE("json shape and stable field order") {
    VerificationReport r;
    r.suite = "demo";
    r.add_param("n", "3");
    r.mode = "symbolic";
    r.record(true, "ok-check", "");
    r.record(false, "bad-check", "value = 2");
    r.elapsed_ms = 12;
    CHECK(r.verdict() == "fail");
    CHECK(r.json() ==
          "{\n"
          "  \"suite\": \"demo\",\n"
          "  \"params\": {\n"
          "    \"n\": \"3\"\n"
          "  },\n"
          "  \"mode\": \"symbolic\",\n"
          "  \"checks_run\": 2,\n"
          "  \"failures\": [\n"
          "    {\n"
          "      \"id\": \"bad-check\",\n"
          "      \"witness\": \"value = 2\"\n"
          "    }\n"
          "  ],\n"
          "  \"elapsed_ms\": 12,\n"
          "  \"verdict\": \"fail\"\n"
          "}\n");
}

TEST_CASE("reports are deterministic given parameters and seed") {
    VerificationReport a = check_idempotency(3, RunOptions::random(3, 99));
    VerificationReport b = check_idempotency(3, RunOptions::random(3, 99));
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    CHECK(a.json() == b.json());

    VerificationReport c = check_idempotency(3, RunOptions::random(3, 100));
    CHECK(c.pass());
    CHECK(c.mode != a.mode);
}
