#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "spincorr/output.hpp"

using namespace spincorr;

namespace {
OutputRecord sample_record() {
  OutputRecord rec;
  rec.command = "correlate --model complete --theta 60.0 --trials 1000 --shards 1 "
                "--seed 42 --format csv";
  rec.model = "complete";
  rec.theta_deg = 60.0;
  rec.quantity = "correlation";
  rec.value = -0.512;
  rec.std_error = 0.0271;
  rec.n = 1000;
  rec.seed = 42;
  return rec;
}
}  // namespace

TEST_CASE("csv schema") {
  CHECK(csv_header() ==
        "command,model,theta_deg,quantity,value,std_error,analytic,z_score,n,seed");

  OutputRecord rec = sample_record();
  attach_reference(rec, -0.5);
  const std::string row = to_csv_row(rec);
  // 10 columns: 9 commas outside any quotes (the command has none here).
  CHECK(std::count(row.begin(), row.end(), ',') == 9);
  CHECK(row.find("correlate --model complete") == 0);
  CHECK(row.find(",complete,") != std::string::npos);
}

TEST_CASE("absent fields stay empty and z needs both inputs") {
  OutputRecord rec = sample_record();
  rec.std_error.reset();
  attach_reference(rec, -0.5);
  CHECK(rec.analytic.has_value());
  CHECK_FALSE(rec.z_score.has_value());

  const std::string row = to_csv_row(rec);
  CHECK(row.find(",,") != std::string::npos);

  OutputRecord with_se = sample_record();
  attach_reference(with_se, -0.5);
  REQUIRE(with_se.z_score.has_value());
  CHECK(*with_se.z_score ==
        doctest::Approx((0.512 - 0.5) / 0.0271).epsilon(1e-12));
}

TEST_CASE("exact zero error with matching value yields z = 0") {
  OutputRecord rec = sample_record();
  rec.value = -1.0;
  rec.std_error = 0.0;
  attach_reference(rec, -1.0);
  REQUIRE(rec.z_score.has_value());
  CHECK(*rec.z_score == 0.0);

  // A mismatch at zero error has no finite z; the field stays empty.
  OutputRecord bad = sample_record();
  bad.value = -1.0;
  bad.std_error = 0.0;
  attach_reference(bad, -0.9);
  CHECK_FALSE(bad.z_score.has_value());
}

TEST_CASE("fields with commas or quotes are escaped") {
  OutputRecord rec = sample_record();
  rec.command = "sweep --theta-grid 0.0,15.0,30.0";
  const std::string row = to_csv_row(rec);
  CHECK(row.rfind("\"sweep --theta-grid 0.0,15.0,30.0\"", 0) == 0);
}

TEST_CASE("csv and json carry identical values") {
  OutputRecord rec = sample_record();
  attach_reference(rec, -0.5);
  const std::vector<OutputRecord> records = {rec};

  const nlohmann::json arr = to_json(records);
  REQUIRE(arr.size() == 1);
  const nlohmann::json& obj = arr[0];

  // The CSV value field is exactly the JSON serialization of the double.
  const std::string row = to_csv_row(rec);
  CHECK(row.find("," + obj["value"].dump() + ",") != std::string::npos);
  CHECK(obj["value"].get<double>() == rec.value);
  CHECK(obj["std_error"].get<double>() == *rec.std_error);
  CHECK(obj["analytic"].get<double>() == *rec.analytic);
  CHECK(obj["n"].get<std::int64_t>() == rec.n);
  CHECK(obj["seed"].get<std::uint64_t>() == rec.seed);
  CHECK(format_double(rec.value) == obj["value"].dump());
}
