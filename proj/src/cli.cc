// Copyright 2026 The assocmwe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "assocmwe/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "CLI11.hpp"
#include "assocmwe/distributional.h"
#include "assocmwe/error.h"
#include "assocmwe/evaluation.h"
#include "json.hpp"

namespace assocmwe {

namespace {

using Json = nlohmann::ordered_json;

// Raw flag values; unset options leave the config untouched.
struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> associations;
  std::optional<std::string> metadata;
  std::optional<std::string> registry;
  std::optional<std::string> fixture;
  std::optional<std::string> vectors;
  std::optional<std::string> table_format;
  std::optional<double> entropy_factor;
  std::optional<double> overlap_max;
  std::optional<int> mutual_min;
  std::optional<std::string> matcher;
  std::optional<std::string> format;
  std::optional<std::string> missing;
  std::optional<std::string> joiner;
  std::optional<int> first_k;
  std::string by = "entropy";
  std::optional<std::string> scores_out;
};

void AddInputOptions(CLI::App *cmd, Flags &f) {
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--associations", f.associations, "association survey table");
  cmd->add_option("--metadata", f.metadata, "JSON respondent-count sidecar");
  cmd->add_option("--registry", f.registry, "phrase registry CSV");
  cmd->add_option("--fixture", f.fixture, "precomputed metrics CSV");
  cmd->add_option("--table-format", f.table_format, "association table format: csv|tsv");
  cmd->add_option("--first-k", f.first_k, "keep only the first k responses per stimulus");
  cmd->add_option("--matcher", f.matcher, "exact | stem_prefix[:k]");
}

void AddThresholdOptions(CLI::App *cmd, Flags &f) {
  cmd->add_option("--entropy-factor", f.entropy_factor, "fraction of log2(respondents)");
  cmd->add_option("--overlap-max", f.overlap_max, "maximum component overlap fraction");
  cmd->add_option("--mutual-min", f.mutual_min, "minimum mutual association count");
}

void AddFormatOption(CLI::App *cmd, Flags &f) {
  cmd->add_option("--format", f.format, "output format: tsv|json");
}

void AddVectorOptions(CLI::App *cmd, Flags &f) {
  cmd->add_option("--vectors", f.vectors, "word2vec text-format vectors");
  cmd->add_option("--missing", f.missing, "missing-vector policy: skip|worst");
  cmd->add_option("--joiner", f.joiner, "separator of phrase tokens in the vector file");
  cmd->add_option("--scores-out", f.scores_out, "write phrase,score,status CSV here");
}

TableFormat ParseTableFormat(std::string_view s) {
  if (s == "csv") return TableFormat::kCsv;
  if (s == "tsv") return TableFormat::kTsv;
  throw UsageError("table format must be csv or tsv, got '" + std::string(s) + "'");
}

OutputFormat ParseOutputFormat(std::string_view s) {
  if (s == "tsv") return OutputFormat::kTsv;
  if (s == "json") return OutputFormat::kJson;
  throw UsageError("--format must be tsv or json, got '" + std::string(s) + "'");
}

MissingPolicy ParseMissing(std::string_view s) {
  if (s == "skip") return MissingPolicy::kSkip;
  if (s == "worst") return MissingPolicy::kWorst;
  throw UsageError("--missing must be skip or worst, got '" + std::string(s) + "'");
}

MatcherMode ParseMatcher(std::string_view s) {
  try {
    return MatcherMode::Parse(s);
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
}

RunConfig BuildConfig(const Flags &f) {
  RunConfig config;
  std::optional<std::string> config_path = f.config;
  if (!config_path) {
    if (const char *env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
      config_path = env;
    }
  }
  if (config_path) {
    std::string content;
    try {
      content = ReadFile(*config_path);
    } catch (const Error &e) {
      throw UsageError(std::string("config: ") + e.what());
    }
    std::string base = std::filesystem::path(*config_path).parent_path().string();
    ApplyConfigJson(content, base, &config);
  }

  if (f.associations) config.associations = f.associations;
  if (f.metadata) config.metadata = f.metadata;
  if (f.registry) config.registry = f.registry;
  if (f.fixture) config.fixture = f.fixture;
  if (f.vectors) config.vectors = f.vectors;
  if (f.table_format) config.table_format = ParseTableFormat(*f.table_format);
  if (f.entropy_factor) config.thresholds.entropy_factor = *f.entropy_factor;
  if (f.overlap_max) config.thresholds.overlap_fraction_max = *f.overlap_max;
  if (f.mutual_min) config.thresholds.mutual_min = *f.mutual_min;
  if (f.matcher) config.matcher = ParseMatcher(*f.matcher);
  if (f.format) config.format = ParseOutputFormat(*f.format);
  if (f.missing) config.missing = ParseMissing(*f.missing);
  if (f.joiner) config.joiner = *f.joiner;
  if (f.first_k) config.first_k = f.first_k;

  try {
    config.thresholds.Validate();
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
  if (config.first_k && *config.first_k < 1) throw UsageError("--first-k must be positive");
  return config;
}

// Metrics rows plus the registry that goes with them.
struct MetricsInput {
  std::vector<MetricsRow> rows;
  std::vector<PhraseEntry> registry;
};

MetricsInput LoadMetricsInput(const RunConfig &config) {
  if (config.associations && config.fixture) {
    throw UsageError("--associations and --fixture are mutually exclusive");
  }
  if (!config.associations && !config.fixture) {
    throw UsageError("one of --associations or --fixture is required");
  }
  MetricsInput input;
  if (config.fixture) {
    if (config.first_k) throw UsageError("--first-k needs --associations");
    input.rows = LoadMetricsFixture(ReadFile(*config.fixture));
    input.registry = config.registry ? LoadPhraseRegistry(ReadFile(*config.registry))
                                     : RegistryFromFixture(input.rows);
    return input;
  }

  if (!config.metadata) throw UsageError("--associations requires --metadata");
  if (!config.registry) throw UsageError("--associations requires --registry");
  ParsedAssociations parsed =
      ParseAssociationFile(ReadFile(*config.associations), config.table_format);
  RespondentMetadata metadata = RespondentMetadata::FromJson(ReadFile(*config.metadata));
  std::vector<AssociationRecord> records = std::move(parsed.records);
  if (config.first_k) {
    records = TakeFirstK(records, *config.first_k);
    metadata = metadata.CappedAt(*config.first_k);
  }
  DistributionMap dists = BuildDistributions(records, metadata);
  input.registry = LoadPhraseRegistry(ReadFile(*config.registry));
  for (const PhraseEntry &entry : input.registry) {
    MetricsRow row;
    row.metrics = ComputePhraseMetrics(dists, entry, config.matcher);
    row.gold_label = entry.gold_label;
    input.rows.push_back(std::move(row));
  }
  return input;
}

std::vector<ClassificationResult> ClassifyAll(const std::vector<MetricsRow> &rows,
                                              const Thresholds &t) {
  std::vector<ClassificationResult> out;
  out.reserve(rows.size());
  for (const MetricsRow &r : rows) out.push_back(Classify(r.metrics, t));
  return out;
}

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string ThresholdLine(const RunConfig &c) {
  return "# thresholds entropy_factor=" + FormatDouble(c.thresholds.entropy_factor) +
         " overlap_fraction_max=" + FormatDouble(c.thresholds.overlap_fraction_max) +
         " mutual_min=" + std::to_string(c.thresholds.mutual_min) +
         " matcher=" + c.matcher.ToString() + "\n";
}

Json ThresholdJson(const RunConfig &c) {
  return {{"entropy_factor", c.thresholds.entropy_factor},
          {"overlap_fraction_max", c.thresholds.overlap_fraction_max},
          {"mutual_min", c.thresholds.mutual_min},
          {"matcher", c.matcher.ToString()}};
}

// Sorted by phrase so output does not depend on input row order.
std::vector<size_t> PhraseOrder(const std::vector<MetricsRow> &rows) {
  std::vector<size_t> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&rows](size_t a, size_t b) {
    return rows[a].metrics.phrase < rows[b].metrics.phrase;
  });
  return order;
}

int CmdValidate(const RunConfig &c, std::ostream &out) {
  if (!c.associations && !c.registry && !c.fixture && !c.vectors) {
    throw UsageError(
        "validate needs at least one of --associations, --registry, --fixture, --vectors");
  }
  std::vector<PhraseEntry> registry;
  if (c.registry) {
    registry = LoadPhraseRegistry(ReadFile(*c.registry));
    out << "registry\t" << *c.registry << "\tentries=" << registry.size() << "\n";
  }
  if (c.associations) {
    ParsedAssociations parsed =
        ParseAssociationFile(ReadFile(*c.associations), c.table_format);
    std::set<std::string> stimuli;
    for (const AssociationRecord &r : parsed.records) stimuli.insert(r.stimulus);
    out << "associations\t" << *c.associations << "\trecords=" << parsed.records.size()
        << "\tdropped_empty=" << parsed.dropped_empty << "\tstimuli=" << stimuli.size()
        << "\n";
    if (c.metadata) {
      DistributionMap dists = BuildDistributions(
          parsed.records, RespondentMetadata::FromJson(ReadFile(*c.metadata)));
      for (const PhraseEntry &e : registry) {
        for (const std::string *s : {&e.phrase, &e.word1, &e.word2}) {
          if (dists.find(*s) == dists.end()) {
            throw MissingDataError("no associations for stimulus '" + *s +
                                       "' (phrase '" + e.phrase + "')",
                                   *s);
          }
        }
      }
      out << "metadata\t" << *c.metadata << "\tdistributions=" << dists.size() << "\n";
    }
  }
  if (c.fixture) {
    std::vector<MetricsRow> rows = LoadMetricsFixture(ReadFile(*c.fixture));
    out << "fixture\t" << *c.fixture << "\trows=" << rows.size() << "\n";
  }
  if (c.vectors) {
    std::vector<std::string> warnings;
    EmbeddingTable table = LoadVectors(ReadFile(*c.vectors), &warnings);
    out << "vectors\t" << *c.vectors << "\ttokens=" << table.size()
        << "\tdimension=" << table.dimension() << "\n";
    for (const std::string &w : warnings) out << "# warning: " << w << "\n";
  }
  out << "ok\n";
  return 0;
}

int CmdMetrics(const RunConfig &c, std::ostream &out) {
  MetricsInput input = LoadMetricsInput(c);
  if (c.format == OutputFormat::kJson) {
    Json rows = Json::array();
    for (const MetricsRow &r : input.rows) {
      const PhraseMetrics &m = r.metrics;
      rows.push_back({{"phrase", m.phrase},
                      {"gold_label", ToString(r.gold_label)},
                      {"a12", m.a12},
                      {"a21", m.a21},
                      {"ph1", m.ph1},
                      {"ph2", m.ph2},
                      {"entropy", m.entropy_bits},
                      {"respondent_count_phrase", m.respondent_count_phrase},
                      {"respondent_count_words", m.respondent_count_words},
                      {"phrase_responses", m.phrase_responses}});
    }
    out << rows.dump(2) << "\n";
  } else {
    out << SerializeMetricsFixture(input.rows);
  }
  return 0;
}

int CmdClassify(const RunConfig &c, std::ostream &out) {
  MetricsInput input = LoadMetricsInput(c);
  std::vector<ClassificationResult> results = ClassifyAll(input.rows, c.thresholds);
  size_t positive = 0;
  for (const ClassificationResult &r : results) positive += r.conventionalized;

  if (c.format == OutputFormat::kJson) {
    Json verdicts = Json::array();
    for (size_t i : PhraseOrder(input.rows)) {
      const ClassificationResult &r = results[i];
      verdicts.push_back({{"phrase", r.phrase},
                          {"gold_label", ToString(input.rows[i].gold_label)},
                          {"conventionalized", r.conventionalized},
                          {"rule", ToString(r.rule)},
                          {"entropy_bits", r.entropy_bits},
                          {"entropy_threshold_bits", r.entropy_threshold_bits},
                          {"overlap_fraction", r.overlap_fraction},
                          {"mutual_max", r.mutual_max}});
    }
    Json doc = {{"thresholds", ThresholdJson(c)},
                {"verdicts", verdicts},
                {"conventionalized", positive},
                {"total", results.size()}};
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << ThresholdLine(c);
  out << "phrase\tgold_label\tconventionalized\trule\tentropy\tentropy_threshold\t"
         "overlap_fraction\tmutual_max\n";
  for (size_t i : PhraseOrder(input.rows)) {
    const ClassificationResult &r = results[i];
    out << r.phrase << '\t' << ToString(input.rows[i].gold_label) << '\t'
        << (r.conventionalized ? "yes" : "no") << '\t' << ToString(r.rule) << '\t'
        << Fixed(r.entropy_bits, 4) << '\t' << Fixed(r.entropy_threshold_bits, 4) << '\t'
        << Fixed(r.overlap_fraction, 4) << '\t' << r.mutual_max << '\n';
  }
  out << "# conventionalized " << positive << "/" << results.size() << "\n";
  return 0;
}

int CmdStats(const RunConfig &c, std::ostream &out) {
  MetricsInput input = LoadMetricsInput(c);
  std::vector<GroupStats> stats;
  for (GoldLabel label : {GoldLabel::kThesaurus, GoldLabel::kNonThesaurus}) {
    std::vector<PhraseMetrics> group;
    for (const MetricsRow &r : input.rows) {
      if (r.gold_label == label) group.push_back(r.metrics);
    }
    if (!group.empty()) stats.push_back(GroupAverages(group, std::string(ToString(label))));
  }
  if (c.format == OutputFormat::kJson) {
    Json groups = Json::array();
    for (const GroupStats &s : stats) {
      groups.push_back({{"group", s.label},
                        {"n", s.size},
                        {"mean_a12", s.mean_a12},
                        {"mean_a21", s.mean_a21},
                        {"mean_ph1", s.mean_ph1},
                        {"mean_ph2", s.mean_ph2},
                        {"mean_entropy", s.mean_entropy}});
    }
    out << groups.dump(2) << "\n";
    return 0;
  }
  out << "group\tn\tmean_a12\tmean_a21\tmean_ph1\tmean_ph2\tmean_entropy\n";
  for (const GroupStats &s : stats) {
    out << s.label << '\t' << s.size << '\t' << Fixed(s.mean_a12, 2) << '\t'
        << Fixed(s.mean_a21, 2) << '\t' << Fixed(s.mean_ph1, 2) << '\t'
        << Fixed(s.mean_ph2, 2) << '\t' << Fixed(s.mean_entropy, 2) << '\n';
  }
  return 0;
}

struct Ranking {
  RankedList list;
  std::set<std::string, std::less<>> relevant;
  std::vector<CompositionalityScore> scores;  // similarity only
};

Ranking BuildRanking(const RunConfig &c, const std::string &by) {
  Ranking ranking;
  if (by == "entropy") {
    MetricsInput input = LoadMetricsInput(c);
    ScoreMap keys;
    for (const MetricsRow &r : input.rows) {
      keys[r.metrics.phrase] = r.metrics.entropy_bits;
      if (r.gold_label == GoldLabel::kThesaurus) ranking.relevant.insert(r.metrics.phrase);
    }
    ranking.list = RankPhrases(keys, Direction::kAscending);
    return ranking;
  }
  if (by != "similarity") throw UsageError("--by must be entropy or similarity");
  if (!c.vectors) throw UsageError("--by similarity requires --vectors");

  std::vector<PhraseEntry> registry;
  if (c.registry) {
    registry = LoadPhraseRegistry(ReadFile(*c.registry));
  } else if (c.fixture) {
    registry = RegistryFromFixture(LoadMetricsFixture(ReadFile(*c.fixture)));
  } else {
    throw UsageError("--by similarity requires --registry or --fixture");
  }
  EmbeddingTable table = LoadVectors(ReadFile(*c.vectors));
  ScoreMap keys;
  std::vector<std::string> unscored;
  for (const PhraseEntry &e : registry) {
    CompositionalityScore s = ScoreCompositionality(table, e, c.joiner);
    const bool relevant = e.gold_label == GoldLabel::kThesaurus;
    if (s.score) {
      keys[e.phrase] = *s.score;
    } else if (c.missing == MissingPolicy::kWorst) {
      unscored.push_back(e.phrase);
    } else {
      ranking.scores.push_back(std::move(s));
      continue;
    }
    if (relevant) ranking.relevant.insert(e.phrase);
    ranking.scores.push_back(std::move(s));
  }
  if (keys.empty()) throw ValidationError("no phrase has all three vectors");
  ranking.list = RankPhrases(keys, Direction::kAscending, unscored);
  return ranking;
}

void WriteScores(const Flags &f, const Ranking &ranking) {
  if (!f.scores_out) return;
  std::FILE *file = std::fopen(f.scores_out->c_str(), "wb");
  if (file == nullptr) throw Error("cannot write '" + *f.scores_out + "'");
  std::string text = SerializeScores(ranking.scores);
  std::fwrite(text.data(), 1, text.size(), file);
  std::fclose(file);
}

std::string MissingName(MissingPolicy p) {
  return p == MissingPolicy::kSkip ? "skip" : "worst";
}

int CmdRank(const RunConfig &c, const Flags &f, std::ostream &out) {
  Ranking ranking = BuildRanking(c, f.by);
  WriteScores(f, ranking);
  const double ap = AveragePrecision(ranking.list, ranking.relevant);
  if (c.format == OutputFormat::kJson) {
    Json items = Json::array();
    for (size_t i = 0; i < ranking.list.items.size(); ++i) {
      const RankedItem &item = ranking.list.items[i];
      items.push_back({{"rank", i + 1},
                       {"phrase", item.phrase},
                       {"key", item.key ? Json(*item.key) : Json(nullptr)},
                       {"relevant", ranking.relevant.count(item.phrase) > 0}});
    }
    Json doc = {{"by", f.by},
                {"direction", ToString(ranking.list.direction)},
                {"missing", MissingName(c.missing)},
                {"items", items},
                {"average_precision", ap}};
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "# by=" << f.by << " direction=" << ToString(ranking.list.direction)
      << " missing=" << MissingName(c.missing) << "\n";
  out << SerializeRanking(ranking.list, ranking.relevant);
  out << "# average_precision=" << FormatDouble(ap) << "\n";
  return 0;
}

int CmdEval(const RunConfig &c, const Flags &f, std::ostream &out) {
  MetricsInput input = LoadMetricsInput(c);
  std::vector<ClassificationResult> results = ClassifyAll(input.rows, c.thresholds);
  const double accuracy = Accuracy(results, input.registry);
  Ranking ranking = BuildRanking(c, f.by);
  WriteScores(f, ranking);
  const double ap = AveragePrecision(ranking.list, ranking.relevant);

  if (c.format == OutputFormat::kJson) {
    Json doc = {{"by", f.by},
                {"missing", MissingName(c.missing)},
                {"thresholds", ThresholdJson(c)},
                {"ranked", ranking.list.items.size()},
                {"average_precision", ap},
                {"accuracy", accuracy},
                {"classified", results.size()}};
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "# by=" << f.by << " missing=" << MissingName(c.missing) << "\n";
  out << ThresholdLine(c);
  out << "metric\tvalue\n";
  out << "average_precision\t" << FormatDouble(ap) << "\n";
  out << "accuracy\t" << FormatDouble(accuracy) << "\n";
  out << "ranked\t" << ranking.list.items.size() << "\n";
  out << "classified\t" << results.size() << "\n";
  return 0;
}

int CmdReport(const RunConfig &c, std::ostream &out) {
  MetricsInput input = LoadMetricsInput(c);
  std::vector<ReportRow> rows;
  for (const MetricsRow &r : input.rows) {
    rows.push_back({r.metrics, r.gold_label, Classify(r.metrics, c.thresholds)});
  }
  out << RenderReport(rows, c.format);
  return 0;
}

std::string RequireString(const Json &value, const std::string &key) {
  if (!value.is_string()) throw UsageError("config: '" + key + "' must be a string");
  return value.get<std::string>();
}

}  // namespace

void ApplyConfigJson(std::string_view content, const std::string &base_dir,
                     RunConfig *config) {
  Json doc;
  try {
    doc = Json::parse(content);
  } catch (const Json::parse_error &e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config: expected a JSON object");

  auto path = [&base_dir](const std::string &p) {
    std::filesystem::path fp(p);
    if (fp.is_relative() && !base_dir.empty()) fp = std::filesystem::path(base_dir) / fp;
    return fp.string();
  };
  auto number = [](const Json &v, const std::string &key) {
    if (!v.is_number()) throw UsageError("config: '" + key + "' must be a number");
    return v.get<double>();
  };

  for (const auto &[key, value] : doc.items()) {
    if (key == "associations") {
      config->associations = path(RequireString(value, key));
    } else if (key == "metadata") {
      config->metadata = path(RequireString(value, key));
    } else if (key == "registry") {
      config->registry = path(RequireString(value, key));
    } else if (key == "fixture") {
      config->fixture = path(RequireString(value, key));
    } else if (key == "vectors") {
      config->vectors = path(RequireString(value, key));
    } else if (key == "table_format") {
      config->table_format = ParseTableFormat(RequireString(value, key));
    } else if (key == "entropy_factor") {
      config->thresholds.entropy_factor = number(value, key);
    } else if (key == "overlap_fraction_max") {
      config->thresholds.overlap_fraction_max = number(value, key);
    } else if (key == "mutual_min") {
      if (!value.is_number_integer()) throw UsageError("config: 'mutual_min' must be an integer");
      config->thresholds.mutual_min = value.get<int>();
    } else if (key == "matcher") {
      config->matcher = ParseMatcher(RequireString(value, key));
    } else if (key == "format") {
      config->format = ParseOutputFormat(RequireString(value, key));
    } else if (key == "missing") {
      config->missing = ParseMissing(RequireString(value, key));
    } else if (key == "joiner") {
      config->joiner = RequireString(value, key);
    } else if (key == "first_k") {
      if (!value.is_number_integer()) throw UsageError("config: 'first_k' must be an integer");
      config->first_k = value.get<int>();
    } else {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }
}

int Run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Detect conventionalized two-word phrases from word-association data"};
  app.name(args.empty() ? "assocmwe" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);
  Flags flags;

  CLI::App *validate = app.add_subcommand("validate", "check input files and report counts");
  AddInputOptions(validate, flags);
  validate->add_option("--vectors", flags.vectors, "word2vec text-format vectors");

  CLI::App *metrics = app.add_subcommand("metrics", "emit per-phrase association metrics");
  AddInputOptions(metrics, flags);
  AddFormatOption(metrics, flags);

  CLI::App *classify = app.add_subcommand("classify", "conventionalization verdicts");
  AddInputOptions(classify, flags);
  AddThresholdOptions(classify, flags);
  AddFormatOption(classify, flags);

  CLI::App *stats = app.add_subcommand("stats", "group averages per gold label");
  AddInputOptions(stats, flags);
  AddFormatOption(stats, flags);

  CLI::App *rank = app.add_subcommand("rank", "rank phrases and score the ranking");
  AddInputOptions(rank, flags);
  AddVectorOptions(rank, flags);
  AddFormatOption(rank, flags);
  rank->add_option("--by", flags.by, "entropy | similarity")->required();

  CLI::App *eval = app.add_subcommand("eval", "average precision and accuracy");
  AddInputOptions(eval, flags);
  AddThresholdOptions(eval, flags);
  AddVectorOptions(eval, flags);
  AddFormatOption(eval, flags);
  eval->add_option("--by", flags.by, "entropy | similarity (default entropy)");

  CLI::App *report = app.add_subcommand("report", "table of metrics and verdicts");
  AddInputOptions(report, flags);
  AddThresholdOptions(report, flags);
  AddFormatOption(report, flags);

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    err << "run '" << app.get_name() << " --help' for usage\n";
    return 2;
  }

  try {
    RunConfig config = BuildConfig(flags);
    if (validate->parsed()) return CmdValidate(config, out);
    if (metrics->parsed()) return CmdMetrics(config, out);
    if (classify->parsed()) return CmdClassify(config, out);
    if (stats->parsed()) return CmdStats(config, out);
    if (rank->parsed()) return CmdRank(config, flags, out);
    if (eval->parsed()) return CmdEval(config, flags, out);
    if (report->parsed()) return CmdReport(config, out);
  } catch (const UsageError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace assocmwe
