#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "persuade/beliefs.hpp"
#include "persuade/corpus.hpp"
#include "persuade/jsonl.hpp"
#include "persuade/learn.hpp"
#include "persuade/report.hpp"
#include "persuade/synthetic.hpp"
#include "persuade/tasks.hpp"
#include "persuade/textfeat.hpp"

namespace py = pybind11;
using namespace persuade;

namespace {

py::object json_to_py(const nlohmann::ordered_json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

DatasetMatrix dataset_from_py(const std::vector<std::vector<double>>& rows,
                              const std::vector<int>& labels,
                              const std::vector<std::string>& groups) {
  DatasetMatrix data;
  data.rows = static_cast<int>(rows.size());
  data.cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != data.cols) {
      throw std::invalid_argument("ragged feature rows");
    }
    data.values.insert(data.values.end(), row.begin(), row.end());
  }
  data.labels = labels;
  data.group_ids = groups;
  for (int j = 0; j < data.cols; ++j) data.feature_names.push_back("f" + std::to_string(j));
  return data;
}

CvConfig cv_config_from(int outer_folds, int inner_folds, const std::string& folding,
                        std::uint64_t seed, const std::vector<double>& c_grid,
                        const std::vector<std::string>& penalties, double tolerance,
                        int max_iterations) {
  CvConfig config;
  config.outer_folds = outer_folds;
  config.inner_folds = inner_folds;
  config.folding = parse_folding(folding);
  config.seed = seed;
  if (!c_grid.empty()) config.grid.c_grid = c_grid;
  if (!penalties.empty()) {
    config.grid.penalties.clear();
    for (const auto& p : penalties) config.grid.penalties.push_back(parse_penalty(p));
  }
  config.grid.tolerance = tolerance;
  config.grid.max_iterations = max_iterations;
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Persuasion-prediction toolkit: debate corpora, prior-belief and linguistic "
            "features, regularized logistic regression, and ideology-controlled tasks.";

  py::enum_<Stance>(m, "Stance")
      .value("PRO", Stance::Pro)
      .value("CON", Stance::Con)
      .value("TIE", Stance::Tie);
  py::enum_<VoteDimension>(m, "VoteDimension")
      .value("CONDUCT", VoteDimension::Conduct)
      .value("SPELLING_GRAMMAR", VoteDimension::SpellingGrammar)
      .value("CONVINCING_ARGUMENTS", VoteDimension::ConvincingArguments)
      .value("RELIABLE_SOURCES", VoteDimension::ReliableSources);
  py::enum_<Opinion>(m, "Opinion")
      .value("PRO", Opinion::Pro)
      .value("CON", Opinion::Con)
      .value("N_O", Opinion::NoOpinion)
      .value("N_S", Opinion::NotSaying)
      .value("UND", Opinion::Undecided);
  py::enum_<IdeologyKind>(m, "IdeologyKind")
      .value("POLITICAL", IdeologyKind::Political)
      .value("RELIGIOUS", IdeologyKind::Religious);
  py::enum_<TaskKind>(m, "TaskKind")
      .value("TASK1_RELIGIOUS", TaskKind::Task1Religious)
      .value("TASK2_POLITICAL", TaskKind::Task2Political);

  py::class_<Round>(m, "Round")
      .def(py::init<>())
      .def_readwrite("index", &Round::index)
      .def_readwrite("pro_text", &Round::pro_text)
      .def_readwrite("con_text", &Round::con_text);

  py::class_<Debate>(m, "Debate")
      .def(py::init<>())
      .def_readwrite("debate_id", &Debate::debate_id)
      .def_readwrite("category", &Debate::category)
      .def_readwrite("claim", &Debate::claim)
      .def_readwrite("pro_debater", &Debate::pro_debater)
      .def_readwrite("con_debater", &Debate::con_debater)
      .def_readwrite("rounds", &Debate::rounds);

  py::class_<Vote>(m, "Vote")
      .def(py::init<>())
      .def_readwrite("voter_id", &Vote::voter_id)
      .def_readwrite("debate_id", &Vote::debate_id)
      .def_readwrite("pre_stance", &Vote::pre_stance)
      .def_readwrite("post_stance", &Vote::post_stance)
      .def("allocation", &Vote::allocation)
      .def("set_allocation", [](Vote& vote, VoteDimension dim, Allocation a) {
        vote.allocations[static_cast<int>(dim)] = a;
      });

  py::class_<PointWeights>(m, "PointWeights")
      .def(py::init<>())
      .def("of", &PointWeights::of)
      .def("validate", &PointWeights::validate)
      .def("set", [](PointWeights& w, VoteDimension dim, int value) {
        w.weight[static_cast<int>(dim)] = value;
      });

  py::class_<UserProfile>(m, "UserProfile")
      .def(py::init<>())
      .def_readwrite("user_id", &UserProfile::user_id)
      .def_readwrite("political_ideology", &UserProfile::political_ideology)
      .def_readwrite("religious_ideology", &UserProfile::religious_ideology)
      .def_readwrite("big_issue_opinions", &UserProfile::big_issue_opinions)
      .def_readwrite("extra", &UserProfile::extra);

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def_readonly("debates", &Corpus::debates)
      .def_readonly("users", &Corpus::users)
      .def_readonly("votes", &Corpus::votes)
      .def_readonly("issue_catalog", &Corpus::issue_catalog);

  m.def(
      "load_corpus",
      [](const std::string& debates, const std::string& users, const std::string& votes,
         bool strict, const std::string& issue_catalog) {
        try {
          LoadResult result = load_corpus(debates, users, votes,
                                          strict ? IngestMode::Strict : IngestMode::Lenient,
                                          issue_catalog);
          return py::make_tuple(std::move(result.corpus), json_to_py(to_json(result.report)));
        } catch (const ValidationError& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("debates"), py::arg("users"), py::arg("votes"), py::arg("strict") = true,
      py::arg("issue_catalog") = std::string(),
      "Load and validate a JSON-lines corpus; returns (corpus, validation_report).");
  m.def("save_corpus", &save_corpus, py::arg("corpus"), py::arg("debates"), py::arg("users"),
        py::arg("votes"));
  m.def("save_issue_catalog", &save_issue_catalog);

  m.def(
      "total_points",
      [](const Vote& vote, const PointWeights& weights) {
        const PointTotals t = total_points(vote, weights);
        return py::make_tuple(t.pro, t.con);
      },
      py::arg("vote"), py::arg("weights") = PointWeights{});
  m.def("winner_by_points", &winner_by_points, py::arg("debate_id"), py::arg("votes"),
        py::arg("weights") = PointWeights{});
  m.def("stance_changed", &stance_changed);
  m.def("convinced_winner", &convinced_winner);
  m.def(
      "vote_dimension_correlations",
      [](const std::vector<Vote>& votes, const PointWeights& weights) {
        const CorrelationMatrix matrix = vote_dimension_correlations(votes, weights);
        py::list labels;
        py::list rows;
        for (const auto& label : matrix.labels) labels.append(label);
        for (const auto& row : matrix.r) {
          py::list r;
          for (const double x : row) r.append(x);
          rows.append(r);
        }
        py::dict out;
        out["labels"] = labels;
        out["matrix"] = rows;
        out["zero_variance"] = matrix.zero_variance;
        return out;
      },
      py::arg("votes"), py::arg("weights") = PointWeights{});

  m.def("encode_big_issues",
        [](const UserProfile& profile, const std::vector<std::string>& catalog) {
          return encode_big_issues(profile, catalog);
        });
  m.def("opinion_similarity", &opinion_similarity);
  m.def("matching_ideology", &matching_ideology);
  m.def("pca_project", [](const std::vector<BigIssuesVector>& vectors) {
    const PcaProjection p = pca_project(vectors);
    py::dict out;
    out["components"] = py::make_tuple(p.components[0], p.components[1]);
    out["mean"] = p.mean;
    py::list projected;
    for (const auto& row : p.projected) projected.append(py::make_tuple(row[0], row[1]));
    out["projected"] = projected;
    out["explained_variance"] =
        py::make_tuple(p.explained_variance[0], p.explained_variance[1]);
    out["second_axis_degenerate"] = p.second_axis_degenerate;
    return out;
  });
  m.def(
      "ideology_classification_experiment",
      [](const Corpus& corpus, IdeologyKind kind, const std::string& label_a,
         const std::string& label_b, std::uint64_t seed) {
        CvConfig cv;
        cv.seed = seed;
        return json_to_py(
            to_json(ideology_classification_experiment(corpus, kind, {label_a, label_b}, cv)));
      },
      py::arg("corpus"), py::arg("kind"), py::arg("label_a"), py::arg("label_b"),
      py::arg("seed") = 0);

  m.def("tokenize", &tokenize);
  py::class_<LexiconSet>(m, "LexiconSet")
      .def_static("builtin", &LexiconSet::builtin)
      .def_static("load_directory", &LexiconSet::load_directory)
      .def("validate", &LexiconSet::validate);
  py::class_<TfidfModel>(m, "TfidfModel")
      .def_static(
          "fit",
          [](const std::vector<std::string>& documents, int min_df, int max_features) {
            std::vector<SideText> docs;
            docs.reserve(documents.size());
            for (const auto& text : documents) docs.push_back({Stance::Pro, text});
            TfidfOptions options;
            options.min_document_frequency = min_df;
            options.max_features = max_features;
            return TfidfModel::fit(docs, options);
          },
          py::arg("documents"), py::arg("min_df") = 2, py::arg("max_features") = 0)
      .def_property_readonly("vocabulary", &TfidfModel::vocabulary)
      .def_property_readonly("idf", &TfidfModel::idf)
      .def("transform",
           [](const TfidfModel& model, const std::string& text) {
             return model.transform(tokenize(text));
           });
  m.def(
      "extract_features",
      [](Stance side, const std::string& text, const LexiconSet& lexicons,
         const TfidfModel& model) {
        const LinguisticFeatureVector v = extract_features({side, text}, lexicons, model);
        py::dict out;
        py::list names;
        for (const auto& info : scalar_feature_layout(lexicons)) names.append(info.name);
        out["names"] = names;
        out["scalars"] = v.scalars;
        out["tfidf"] = v.tfidf;
        return out;
      },
      py::arg("side"), py::arg("text"), py::arg("lexicons"), py::arg("model"));

  py::class_<TrainedModel>(m, "TrainedModel")
      .def_readonly("weights", &TrainedModel::weights)
      .def_readonly("intercept", &TrainedModel::intercept)
      .def_readonly("iterations", &TrainedModel::iterations)
      .def_readonly("objective", &TrainedModel::objective)
      .def_property_readonly("converged", [](const TrainedModel& model) {
        return model.status == OptimStatus::Converged;
      });
  m.def(
      "train_logreg",
      [](const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
         const std::string& penalty, double c, double tolerance, int max_iterations) {
        OptimOptions options;
        options.tolerance = tolerance;
        options.max_iterations = max_iterations;
        return train_logreg(dataset_from_py(rows, labels, {}), parse_penalty(penalty), c,
                            options);
      },
      py::arg("rows"), py::arg("labels"), py::arg("penalty") = "l2", py::arg("c") = 1.0,
      py::arg("tolerance") = 1e-6, py::arg("max_iterations") = 10000);
  m.def(
      "predict",
      [](const TrainedModel& model, const std::vector<std::vector<double>>& rows) {
        std::vector<int> labels(rows.size(), 0);
        const Prediction p = predict(model, dataset_from_py(rows, labels, {}));
        return py::make_tuple(p.labels, p.probabilities);
      },
      py::arg("model"), py::arg("rows"));
  m.def(
      "nested_cv",
      [](const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
         const std::vector<std::string>& groups, int outer_folds, int inner_folds,
         const std::string& folding, std::uint64_t seed, const std::vector<double>& c_grid,
         const std::vector<std::string>& penalties, double tolerance, int max_iterations) {
        const CvConfig config = cv_config_from(outer_folds, inner_folds, folding, seed, c_grid,
                                               penalties, tolerance, max_iterations);
        return json_to_py(
            to_json(nested_cv(dataset_from_py(rows, labels, groups), config), true));
      },
      py::arg("rows"), py::arg("labels"), py::arg("groups") = std::vector<std::string>{},
      py::arg("outer_folds") = 5, py::arg("inner_folds") = 3,
      py::arg("folding") = "stratified", py::arg("seed") = 0,
      py::arg("c_grid") = std::vector<double>{}, py::arg("penalties") = std::vector<std::string>{},
      py::arg("tolerance") = 1e-6, py::arg("max_iterations") = 10000);
  m.def("mcnemar", [](const std::vector<int>& a, const std::vector<int>& b,
                      const std::vector<int>& labels) {
    return json_to_py(to_json(mcnemar(a, b, labels)));
  });
  m.def("majority_baseline", &majority_baseline);

  py::class_<TaskInstance>(m, "TaskInstance")
      .def_readonly("voter_id", &TaskInstance::voter_id)
      .def_readonly("debate_id", &TaskInstance::debate_id)
      .def_readonly("label", &TaskInstance::label)
      .def_readonly("user_features", &TaskInstance::user_features);
  m.def("user_feature_names", [] { return user_feature_names(); });
  m.def("all_feature_groups", &all_feature_groups);
  m.def(
      "build_task_instances",
      [](const Corpus& corpus, TaskKind task, const std::string& category,
         const std::string& ideology_a, const std::string& ideology_b) {
        TaskSpec spec = task == TaskKind::Task1Religious ? TaskSpec::task1_defaults()
                                                         : TaskSpec::task2_defaults();
        spec.category_filter = category == "ALL" ? "" : category;
        if (!ideology_a.empty()) spec.ideology_pair = {ideology_a, ideology_b};
        return build_task_instances(corpus, spec);
      },
      py::arg("corpus"), py::arg("task"), py::arg("category") = "ALL",
      py::arg("ideology_a") = std::string(), py::arg("ideology_b") = std::string());
  m.def("language_only_ceiling", &language_only_ceiling);
  m.def(
      "run_ablation",
      [](const Corpus& corpus, TaskKind task, const std::string& category,
         const std::vector<std::string>& feature_groups, std::uint64_t seed,
         const std::vector<double>& c_grid, bool singletons, int tfidf_max_features) {
        TaskSpec spec = task == TaskKind::Task1Religious ? TaskSpec::task1_defaults()
                                                         : TaskSpec::task2_defaults();
        spec.category_filter = category == "ALL" ? "" : category;
        if (!feature_groups.empty()) spec.feature_groups = feature_groups;
        AblationConfig config;
        config.cv.seed = seed;
        if (!c_grid.empty()) config.cv.grid.c_grid = c_grid;
        config.include_singletons = singletons;
        config.tfidf.max_features = tfidf_max_features;
        try {
          return json_to_py(to_json(run_ablation(corpus, spec, LexiconSet::builtin(), config)));
        } catch (const EmptyInstanceSetError& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("corpus"), py::arg("task"), py::arg("category") = "ALL",
      py::arg("feature_groups") = std::vector<std::string>{}, py::arg("seed") = 0,
      py::arg("c_grid") = std::vector<double>{}, py::arg("singletons") = true,
      py::arg("tfidf_max_features") = 0);

  py::class_<SyntheticParams>(m, "SyntheticParams")
      .def(py::init<>())
      .def_readwrite("n_debates", &SyntheticParams::n_debates)
      .def_readwrite("voters_per_debate", &SyntheticParams::voters_per_debate)
      .def_readwrite("p_match", &SyntheticParams::p_match)
      .def_readwrite("planted_kind", &SyntheticParams::planted_kind)
      .def_readwrite("issue_count", &SyntheticParams::issue_count)
      .def_readwrite("p_issue_align", &SyntheticParams::p_issue_align)
      .def_readwrite("p_follow_arguments", &SyntheticParams::p_follow_arguments)
      .def_readwrite("p_follow_sources", &SyntheticParams::p_follow_sources)
      .def_readwrite("rounds_per_debate", &SyntheticParams::rounds_per_debate)
      .def_readwrite("seed", &SyntheticParams::seed);
  m.def("generate_synthetic_corpus", &generate_synthetic_corpus);
}
