// Copyright 2026 The motifpred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// motifpred command line. Every configuration key is also a long flag;
// values given on the command line override the --config file.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motifpred/motifpred.h"

namespace {

struct Command {
  const char* name;
  const char* help;
  mp_status (*run)(const mp_config*);
};

mp_status RunExport(const mp_config* config) {
  uint64_t n_train = 0;
  uint64_t n_val = 0;
  return mp_run_export(config, &n_train, &n_val);
}

const Command kCommands[] = {
    {"score", "score explicit motif queries", mp_run_score},
    {"export", "write train/validation JSONL datasets", RunExport},
    {"bench", "run the heuristic benchmark grid", mp_run_bench},
    {"embed", "compute node embeddings", mp_run_embed},
    {"auc", "compute AUC from a scores CSV", mp_run_auc},
};

int Report(mp_status status) {
  std::fprintf(stderr, "motifpred: error: %s: %s\n", mp_status_name(status), mp_last_error());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order motif prediction toolkit"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", mp_version());

  std::string config_file;
  app.add_option("--config", config_file, "flat key=value configuration file")
      ->check(CLI::ExistingFile);

  // Keys set on the command line; applied after the config file.
  std::map<std::string, std::string> values;
  for (size_t i = 0; i < mp_config_key_count(); ++i) {
    const std::string key = mp_config_key(i);
    app.add_option("--" + key, values[key], "configuration key '" + key + "'")
        ->group("Configuration");
  }
  bool no_labels = false;
  bool no_embedding = false;
  app.add_flag("--no-labels", no_labels, "drop the inner/outer label features")
      ->group("Ablation");
  app.add_flag("--no-embedding", no_embedding, "drop the node embedding features")
      ->group("Ablation");

  const Command* selected = nullptr;
  for (const auto& command : kCommands) {
    auto* sub = app.add_subcommand(command.name, command.help);
    sub->fallthrough();
    sub->callback([&selected, &command] { selected = &command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  mp_config* config = nullptr;
  mp_status status = mp_config_create(&config);
  if (status != MP_OK) return Report(status);

  int rc = 0;
  auto apply = [&]() -> mp_status {
    if (!config_file.empty()) {
      if (auto s = mp_config_load_file(config, config_file.c_str()); s != MP_OK) return s;
    }
    for (size_t i = 0; i < mp_config_key_count(); ++i) {
      const std::string key = mp_config_key(i);
      if (app.count("--" + key) == 0) continue;
      if (auto s = mp_config_set(config, key.c_str(), values[key].c_str()); s != MP_OK) return s;
    }
    if (no_labels) {
      if (auto s = mp_config_set(config, "labels", "false"); s != MP_OK) return s;
    }
    if (no_embedding) {
      if (auto s = mp_config_set(config, "embedding", "false"); s != MP_OK) return s;
    }
    if (auto s = mp_config_validate(config); s != MP_OK) return s;
    return selected->run(config);
  };
  status = apply();
  if (status != MP_OK) rc = Report(status);
  mp_config_destroy(config);
  return rc;
}
