// Command-line front end: train, evaluate, tag, serve, ingest-check.

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "scalar/scalar.hpp"
#include "scalar/service.hpp"

#ifndef SCALAR_DATA_DIR
#define SCALAR_DATA_DIR "data"
#endif

namespace {

namespace fs = std::filesystem;

struct ResourceFlags {
  std::string data_dir = SCALAR_DATA_DIR;
  std::string dictionary;
  std::string user_words;
  std::string abbreviations;
  std::string embeddings;

  void attach(CLI::App& app) {
    app.add_option("--data-dir", data_dir, "Directory holding word lists and vectors")->envname("SCALAR_DATA_DIR");
    app.add_option("--dictionary", dictionary, "Dictionary word list")->envname("SCALAR_DICTIONARY");
    app.add_option("--user-words", user_words, "User-accepted words")->envname("SCALAR_USER_WORDS");
    app.add_option("--abbreviations", abbreviations, "User-accepted abbreviations")->envname("SCALAR_ABBREVIATIONS");
    app.add_option("--embeddings", embeddings, "Plain-text word vector file")->envname("SCALAR_EMBEDDINGS");
  }

  std::shared_ptr<const scalar::Resources> load() const {
    scalar::ResourcePaths paths;
    paths.data_dir = data_dir;
    paths.dictionary = dictionary;
    paths.user_words = user_words;
    paths.abbreviations = abbreviations;
    paths.embeddings = embeddings;
    return scalar::Resources::load(paths);
  }
};

scalar::gbt::Ensemble read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw scalar::LoadError("cannot open model file " + path);
  return scalar::gbt::Ensemble::deserialize(in);
}

std::vector<scalar::DatasetRow> read_dataset_strict(const std::string& path) {
  auto parsed = scalar::parse_dataset(fs::path(path));
  for (const auto& w : parsed.warnings) std::cerr << path << ": warning: " << w.message << '\n';
  for (const auto& r : parsed.rejected) std::cerr << path << ":" << r.line << ": rejected: " << r.message << '\n';
  if (!parsed.rejected.empty()) {
    throw scalar::LoadError(std::to_string(parsed.rejected.size()) + " dataset row(s) rejected");
  }
  return std::move(parsed.rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Part-of-speech tagger for source-code identifiers"};
  app.require_subcommand(1);

  ResourceFlags resources;
  scalar::TrainingOptions train_opts;
  std::string dataset;
  std::string model_path = "model.txt";
  std::string context = "declaration";
  std::string identifier;
  std::string cache_file;
  std::string host = "0.0.0.0";
  int port = 8080;
  bool json_output = false;

  auto* train = app.add_subcommand("train", "Train a model from a TSV dataset");
  train->add_option("--dataset", dataset, "identifier TAB context TAB pattern rows")->required();
  train->add_option("--output,--model", model_path, "Where to write the model");
  train->add_option("--seed", train_opts.hp.seed, "Random seed");
  train->add_option("--rounds", train_opts.hp.n_rounds, "Boosting rounds");
  train->add_option("--learning-rate", train_opts.hp.learning_rate, "Shrinkage per round");
  train->add_option("--max-depth", train_opts.hp.max_depth, "Tree depth limit");
  train->add_option("--min-samples-leaf", train_opts.hp.min_samples_leaf, "Smallest leaf");
  train->add_option("--folds", train_opts.folds, "Cross-validation folds (0 disables)");
  train->add_option("--train-fraction", train_opts.train_fraction, "Fraction of words used for training");
  train->add_flag("--json", json_output, "Print the held-out report as JSON");
  resources.attach(*train);

  auto* evaluate = app.add_subcommand("evaluate", "Score a model on a TSV dataset");
  evaluate->add_option("--dataset", dataset)->required();
  evaluate->add_option("--model", model_path)->envname("SCALAR_MODEL");
  evaluate->add_flag("--json", json_output, "Print the report as JSON");
  resources.attach(*evaluate);

  auto* tag = app.add_subcommand("tag", "Tag one identifier and print JSON");
  tag->add_option("identifier", identifier)->required();
  tag->add_option("--context", context, "function, class, attribute, parameter or declaration");
  tag->add_option("--model", model_path)->envname("SCALAR_MODEL");
  resources.attach(*tag);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port)->envname("SCALAR_PORT");
  serve->add_option("--host", host)->envname("SCALAR_HOST");
  serve->add_option("--model", model_path)->envname("SCALAR_MODEL");
  serve->add_option("--cache-file", cache_file)->envname("SCALAR_CACHE_FILE");
  resources.attach(*serve);

  auto* check = app.add_subcommand("ingest-check", "Validate a dataset file");
  check->add_option("--dataset", dataset)->required();
  resources.attach(*check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) {
      const auto res = resources.load();
      const auto rows = read_dataset_strict(dataset);
      const auto examples = scalar::ingest(rows, *res);
      std::cout << "identifiers: " << rows.size() << ", words: " << examples.size() << '\n';
      const auto outcome = scalar::train_and_evaluate(examples, train_opts);
      std::cout << "split: train " << outcome.train_rows << " words, test " << outcome.test_rows << " words\n";
      if (outcome.cv) {
        for (auto c : outcome.cv->sparse_classes) {
          std::cerr << "warning: tag " << scalar::kScalarTagCodes[c] << " has fewer examples than folds\n";
        }
        std::cout << train_opts.folds << "-fold CV: mean accuracy " << outcome.cv->mean_accuracy
                  << ", mean balanced accuracy " << outcome.cv->mean_balanced_accuracy << '\n';
      }
      {
        std::ofstream out(model_path, std::ios::binary | std::ios::trunc);
        if (!out) throw scalar::LoadError("cannot write model file " + model_path);
        outcome.model.serialize(out);
      }
      std::cout << "model written to " << model_path << " (version "
                << scalar::model_version(outcome.model.serialize()) << ")\n";
      if (outcome.test_rows > 0) {
        std::cout << "held-out evaluation:\n";
        std::cout << (json_output ? scalar::to_json(outcome.held_out).dump(2) + "\n"
                                  : scalar::to_table(outcome.held_out));
      }
      return 0;
    }
    if (*evaluate) {
      const auto res = resources.load();
      const scalar::Tagger tagger(res, read_model(model_path));
      const auto rows = read_dataset_strict(dataset);
      const auto examples = scalar::ingest(rows, *res);
      if (examples.size() == 0) throw scalar::LoadError("dataset has no words to evaluate");
      const auto report = scalar::evaluate_examples(tagger.model(), examples.examples);
      std::cout << (json_output ? scalar::to_json(report).dump(2) + "\n" : scalar::to_table(report));
      return 0;
    }
    if (*tag) {
      const auto ctx = scalar::parse_context(context);
      if (!ctx) throw scalar::ContractViolation("unknown context '" + context + "'");
      const auto res = resources.load();
      auto tagger = std::make_shared<const scalar::Tagger>(res, read_model(model_path));
      scalar::TaggingService service(tagger);
      const auto response = service.handle_tag(context, identifier);
      if (response.status != 200) {
        std::cerr << "error: " << response.json()["message"].get<std::string>() << '\n';
        return 1;
      }
      std::cout << response.json().dump(2) << '\n';
      return 0;
    }
    if (*serve) {
      const auto res = resources.load();
      auto tagger = std::make_shared<const scalar::Tagger>(res, read_model(model_path));
      std::optional<fs::path> cache;
      if (!cache_file.empty()) cache = cache_file;
      // SIGINT/SIGTERM stop the server so run() can flush the cache. Block them
      // before any thread starts; a dedicated thread waits for them.
      sigset_t stop_signals;
      sigemptyset(&stop_signals);
      sigaddset(&stop_signals, SIGINT);
      sigaddset(&stop_signals, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

      scalar::TaggingService service(tagger, cache);
      scalar::HttpServer server(service);
      const int bound = server.bind(host, port);
      if (bound < 0) throw scalar::Error("cannot bind " + host + ":" + std::to_string(port));
      std::thread waiter([&] {
        int sig = 0;
        sigwait(&stop_signals, &sig);
        server.stop();
      });
      std::cerr << "serving model " << tagger->version() << " on " << host << ":" << bound << '\n';
      server.run();
      if (waiter.joinable()) {
        pthread_kill(waiter.native_handle(), SIGTERM);  // no-op if it already returned
        waiter.join();
      }
      std::cerr << "stopped\n";
      return 0;
    }
    if (*check) {
      const auto res = resources.load();
      const auto parsed = scalar::parse_dataset(fs::path(dataset));
      for (const auto& w : parsed.warnings) std::cerr << dataset << ": warning: " << w.message << '\n';
      for (const auto& r : parsed.rejected) std::cerr << dataset << ":" << r.line << ": rejected: " << r.message << '\n';
      const auto examples = scalar::ingest(parsed.rows, *res);
      std::cout << "identifiers: " << parsed.rows.size() << ", words: " << examples.size()
                << ", rejected: " << parsed.rejected.size() << '\n';
      return parsed.rejected.empty() ? 0 : 1;
    }
  } catch (const scalar::DegenerateTraining& e) {
    std::cerr << "error: degenerate training data: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
