#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sopra {
namespace {

using namespace sopra::testing;

template <class E>
E expect_throws(const std::string& text) {
  try {
    parse_config(text);
  } catch (const E& e) {
    return e;
  } catch (const std::exception& e) {
    ADD_FAILURE() << "wrong exception: " << e.what();
    throw;
  }
  ADD_FAILURE() << "no exception for:\n" << text;
  throw std::logic_error("unreachable");
}

TEST(ParseConfig, EmptyInputGivesDefaults) {
  EXPECT_EQ(parse_config(std::string()), ScenarioConfig{});
  EXPECT_EQ(parse_config("# only a comment\n\n"), ScenarioConfig{});
}

TEST(ParseConfig, ReadsScalarKeys) {
  const auto c = parse_config(
      "[scenario]\nagent_count = 20\np_transmit = 0.25\nmutual_talk_required = true\nseed = 99\n"
      "[schedule]\ncoffee_means = 100, 300, 400\n"
      "[layout]\noffice_capacity = 4\ncoffee_places = 2\n");
  EXPECT_EQ(c.agent_count, 20);
  EXPECT_EQ(c.p_transmit, 0.25);
  EXPECT_TRUE(c.mutual_talk_required);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.schedule.coffee_means, (std::vector<double>{100, 300, 400}));
  EXPECT_EQ(c.layout.office_capacity, 4);
  EXPECT_EQ(c.layout.coffee_places, 2);
}

TEST(ParseConfig, FrequencyKeysAddToDefaults) {
  const auto c = parse_config(
      "[frequencies]\ncompetence.fact_talk.listening_skills = 1\ntriggers.rumourmongering = agent, coffee_place\n"
      "values.fact_talk = tradition\n");
  EXPECT_EQ((c.frequencies.competence_belief.at({fact(), competence("listening_skills")})), 1.0);
  EXPECT_EQ(c.frequencies.trigger_categories.at(rumour()),
            (std::set<ElementCategory>{*parse_element_category("agent"), *parse_element_category("coffee_place")}));
  EXPECT_EQ(c.frequencies.value_links.at(fact()), (std::set<ValueId>{value("tradition")}));
}

TEST(ParseConfig, OutOfRangeProbabilityNamesTheKey) {
  const auto e = expect_throws<ConstraintError>("[scenario]\np_transmit = 1.5\n");
  EXPECT_EQ(e.exit_code(), 3);
  EXPECT_NE(std::string(e.what()).find("p_transmit"), std::string::npos) << e.what();
}

TEST(ParseConfig, OtherConstraintViolations) {
  expect_throws<ConstraintError>("[scenario]\nagent_count = 0\n");
  expect_throws<ConstraintError>("[scenario]\nseed_informed = 51\n");
  expect_throws<ConstraintError>("[scenario]\ndays = 0\n");
  expect_throws<ConstraintError>("[scenario]\nconversation_radius = -1\n");
  expect_throws<ConstraintError>("[values]\ncorrelation = 1, 0.5, 0.5\n");
  expect_throws<ConstraintError>("[frequencies]\ncompetence.fact_talk.listening_skills = 2\n");
  expect_throws<ConstraintError>("[frequencies]\ntriggers.fact_talk = spaceship\n");
}

TEST(ParseConfig, UnknownNamesExitFour) {
  EXPECT_EQ(expect_throws<UnknownKeyError>("[scenario]\nagents = 5\n").exit_code(), 4);
  expect_throws<UnknownKeyError>("[weather]\nsunny = true\n");
  expect_throws<UnknownKeyError>("[frequencies]\ncompetence.juggling.listening_skills = 0.5\n");
  expect_throws<UnknownKeyError>("[frequencies]\ncompetence.fact_talk.juggling = 0.5\n");
}

TEST(ParseConfig, MalformedInputExitsTwo) {
  EXPECT_EQ(expect_throws<ParseError>("[scenario]\np_transmit = lots\n").exit_code(), 2);
  expect_throws<ParseError>("[scenario\nagent_count = 5\n");
  expect_throws<ParseError>("[scenario]\nthis line has no equals sign\n");
  expect_throws<ParseError>("[scenario]\nmutual_talk_required = maybe\n");
  expect_throws<ParseError>("[scenario]\nagent_count = 5.5\n");
}

TEST(ParseConfig, CommentsAreIgnored) {
  const auto c = parse_config("# header\n[scenario]\n  # indented\n; semicolon\nagent_count = 7\n");
  EXPECT_EQ(c.agent_count, 7);
}

TEST(SerializeConfig, RoundTripsDefaultsAndEdits) {
  EXPECT_EQ(parse_config(serialize_config(ScenarioConfig{})), ScenarioConfig{});
  ScenarioConfig c;
  c.agent_count = 13;
  c.p_transmit = 0.1;  // not exactly representable
  c.schedule.coffee_means = {90.5};
  c.frequencies.competence_belief[{rumour(), competence("sneaky_skills")}] = 1.0 / 3;
  c.frequencies.trigger_categories[fact()].clear();
  c.value_correlation = ValueCorrelationMatrix::identity(7);
  c.habit_log_sd = 0.3;
  c.layout.grid_spacing = 12.25;
  EXPECT_EQ(parse_config(serialize_config(c)), c);
  const std::string text = serialize_config(c);
  EXPECT_EQ(serialize_config(parse_config(text)), text);
}

TEST(LoadConfig, MissingFileIsIoError) {
  TempDir dir;
  try {
    load_config(dir / "absent.ini");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.exit_code(), 5);
  }
}

MetricsTrace one_day_trace() {
  ScenarioConfig c;
  c.days = 1;
  return run_replication(c, make_layout(50, 5, 1, 10.0), 2);
}

TEST(TraceCsv, OneLinePerTickPlusHeader) {
  const std::string csv = to_csv(one_day_trace());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 481);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kTraceHeader);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv.substr(csv.find('\n') + 1, 2), "0,");
}

TEST(TableCsv, UnreachedWatermarkIsEmpty) {
  ExperimentTable t;
  ReplicationRow r{LayoutVariant::OfficeSize, 5, 0, 0.6, {12, std::nullopt, std::nullopt}};
  t.rows.push_back(r);
  t.summaries.push_back(summarize(t.rows));
  EXPECT_EQ(to_csv(t), std::string(kTableHeader) +
                           "\noffice-size,5,0,0.6,12,,\n"
                           "office-size,5,mean,0.6,12,,\n"
                           "office-size,5,sd,0,0,,\n");
}

TEST(ExportCsv, ReExportIsByteIdentical) {
  TempDir dir;
  const auto tr = one_day_trace();
  export_csv(tr, dir / "a.csv");
  export_csv(tr, dir / "b.csv");
  EXPECT_EQ(read_file(dir / "a.csv"), read_file(dir / "b.csv"));
  EXPECT_EQ(read_file(dir / "a.csv"), to_csv(tr));
}

TEST(ExportCsv, UnwritablePathIsIoError) {
  TempDir dir;
  try {
    export_csv(one_day_trace(), dir / "no_such_dir" / "x.csv");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.exit_code(), 5);
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3)), 1.0 / 3);
}

}  // namespace
}  // namespace sopra
