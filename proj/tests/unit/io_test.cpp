// Copyright 2026 The ctmpem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ctmpem/calibration.hpp"
#include "ctmpem/characterization.hpp"
#include "ctmpem/error.hpp"
#include "ctmpem/io.hpp"
#include "gtest/gtest.h"

using namespace ctmpem;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("ctmpem_io_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string read_text(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
std::string validity_message(F &&f) {
  try {
    f();
  } catch (const ValidityError &e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST(io, observable_round_trip) {
  Observable o(3, {parse_pauli_label("IXZ", 0.5), parse_pauli_label("YYI", -1.25), parse_pauli_label("III", 2.0)});
  Json j = observable_to_json(o);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0].at("pauli_label").get<std::string>().size(), 3u);
  Observable back = observable_from_json(j);
  EXPECT_EQ(back.terms().size(), o.terms().size());
  for (std::size_t k = 0; k < o.terms().size(); ++k) {
    EXPECT_EQ(pauli_label(back.terms()[k]), pauli_label(o.terms()[k]));
    EXPECT_EQ(back.terms()[k].coefficient, o.terms()[k].coefficient);
  }
  Json bad = Json::parse(R"([{"pauli_label": "XZ", "coeff_re": 1.0}, {"pauli_label": "X", "coeff_re": 1.0}])");
  EXPECT_NE(validity_message([&] { observable_from_json(bad); }).find("width"), std::string::npos);
  Json bad_letter = Json::parse(R"([{"pauli_label": "XQ", "coeff_re": 1.0}])");
  EXPECT_NE(validity_message([&] { observable_from_json(bad_letter); }).find("observable[0]"), std::string::npos);
}

TEST(io, model_round_trip_recomputes_gamma) {
  CtmpModel m(3, {GeneratorTerm::single(GeneratorKind::single_decay, 2, 0.04),
                  GeneratorTerm::pair(GeneratorKind::exchange_10_01, 0, 2, 0.001)});
  Json j = model_to_json(m);
  EXPECT_FALSE(j.contains("gamma"));
  CtmpModel back = model_from_json(j);
  ASSERT_EQ(back.terms().size(), 2u);
  EXPECT_EQ(back.terms()[1].kind, GeneratorKind::exchange_10_01);
  EXPECT_EQ(back.terms()[1].qubits, (std::array<int, 2>{0, 2}));
  EXPECT_EQ(back.terms()[1].rate, 0.001);
  EXPECT_EQ(back.gamma(), m.gamma());
  EXPECT_EQ(model_to_json(back).dump(), j.dump());
}

TEST(io, model_errors_name_fields) {
  auto msg = validity_message([] {
    model_from_json(Json::parse(R"({"num_qubits": 2, "terms": [{"kind": "pair_decay", "qubits": [0], "rate": 0.1}]})"));
  });
  EXPECT_NE(msg.find("model.terms[0].qubits"), std::string::npos) << msg;
  msg = validity_message([] {
    model_from_json(Json::parse(R"({"num_qubits": 2, "terms": [{"kind": "blink", "qubits": [0], "rate": 0.1}]})"));
  });
  EXPECT_NE(msg.find("model.terms[0]"), std::string::npos) << msg;
  msg = validity_message([] { model_from_json(Json::parse(R"({"terms": []})")); });
  EXPECT_NE(msg.find("num_qubits"), std::string::npos) << msg;
  msg = validity_message([] {
    model_from_json(Json::parse(R"({"num_qubits": 2, "terms": [{"kind": "single_decay", "qubits": [0], "rate": -1}]})"));
  });
  EXPECT_NE(msg.find("model.terms[0]"), std::string::npos) << msg;
}

TEST(io, calibration_round_trip_and_bit_order) {
  RandomStream rng(91);
  CtmpModel m(3, {GeneratorTerm::single(GeneratorKind::single_decay, 0, 0.1)});
  auto labels = calibration_state_labels(3);
  CalibrationSet cal = simulate_calibration(m, labels, 500, rng);
  Json j = calibration_to_json(cal);
  EXPECT_EQ(j.at("bit_order"), "qubit0_rightmost");
  CalibrationSet back = calibration_from_json(j);
  ASSERT_EQ(back.records.size(), cal.records.size());
  for (std::size_t k = 0; k < cal.records.size(); ++k) {
    EXPECT_EQ(back.records[k].label, cal.records[k].label);
    EXPECT_EQ(back.records[k].counts, cal.records[k].counts);
  }

  Json left = Json::parse(R"({"num_qubits": 2, "shots": 10, "bit_order": "qubit0_leftmost",
      "results": [{"label": "10", "counts": {"10": 9, "00": 1}}]})");
  CalibrationSet l = calibration_from_json(left);
  EXPECT_EQ(l.records[0].label, 0b01u);
  EXPECT_EQ(l.records[0].counts.count(0b01), 9u);

  Json bad_order = left;
  bad_order["bit_order"] = "msb";
  EXPECT_NE(validity_message([&] { calibration_from_json(bad_order); }).find("bit_order"), std::string::npos);
  Json bad_count = left;
  bad_count["results"][0]["counts"]["10"] = -3;
  EXPECT_NE(validity_message([&] { calibration_from_json(bad_count); }).find("results[0].counts"),
            std::string::npos);
  Json too_many = left;
  too_many["results"][0]["counts"]["10"] = 30;
  EXPECT_THROW(calibration_from_json(too_many), ValidityError);
}

TEST(io, graph_round_trip) {
  CouplingGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CouplingGraph back = graph_from_json(graph_to_json(g));
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_THROW(graph_from_json(Json::parse(R"({"num_qubits": 2, "edges": [[0, 0]]})")), ValidityError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"num_qubits": 2, "edges": [[0, 5]]})")), ValidityError);
}

TEST(io, files_and_atomic_writes) {
  auto dir = scratch_dir();
  auto path = dir / "model.json";
  CtmpModel m(1, {GeneratorTerm::single(GeneratorKind::single_excite, 0, 0.02)});
  write_json_file(path, model_to_json(m));
  EXPECT_EQ(model_from_json(read_json_file(path)).terms()[0].rate, 0.02);
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    EXPECT_EQ(entry.path().filename(), "model.json");
  }
  write_file_atomic(path, "replaced");
  EXPECT_EQ(read_text(path), "replaced");

  EXPECT_THROW(read_json_file(dir / "missing.json"), IoError);
  write_file_atomic(dir / "broken.json", "{not json");
  EXPECT_THROW(read_json_file(dir / "broken.json"), IoError);
  EXPECT_THROW(write_file_atomic(dir / "no_such_dir" / "x.json", "{}"), IoError);
  std::filesystem::remove_all(dir);
}

TEST(io, csv_formats) {
  CouplingGraph g(3, {{0, 1}, {1, 2}});
  CtmpModel m(3, {GeneratorTerm::single(GeneratorKind::single_decay, 1, 0.03),
                  GeneratorTerm::pair(GeneratorKind::pair_decay, 0, 2, 0.001),
                  GeneratorTerm::pair(GeneratorKind::pair_excite, 0, 1, 0.0)});
  GroupedRates r = group_rates(m, g);
  std::string records = rate_records_to_csv(r);
  EXPECT_EQ(records.substr(0, records.find('\n')), "kind,distance,qubit_i,qubit_j,rate");
  EXPECT_NE(records.find("decay,2,0,2,0.001"), std::string::npos) << records;
  std::string summary = distance_summary_to_csv(r);
  EXPECT_EQ(summary.substr(0, summary.find('\n')), "kind,distance,q1,median,q3,count,zeros");
  EXPECT_NE(summary.find("excitation,1,,,,1,1"), std::string::npos) << summary;

  SweepResult sweep;
  sweep.s_values = {-1.0, 0.5};
  sweep.columns.push_back({"noiseless_exact", {1.0, 2.0}, {0.0, 0.0}});
  sweep.columns.push_back({"mitigated", {1.5, 2.5}, {0.1, 0.2}});
  std::string csv = sweep_to_csv(sweep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "s,noiseless_exact,mitigated,noiseless_exact_std_error,mitigated_std_error");
  EXPECT_NE(csv.find("-1,1,1.5,0,0.1"), std::string::npos) << csv;
}

TEST(io, format_double_round_trips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-12, 0.0, 123456789.125}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}
