// Copyright 2026 The progsyn Authors. All Rights Reserved.
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

#include "progsyn/fitness_model.hpp"

#include <csignal>
#include <cstdio>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <thread>

#include "progsyn/io.hpp"

namespace progsyn {

CandidateTraces collect_traces(const Program& candidate, const Spec& spec, const Registry& registry) {
  CandidateTraces traces;
  traces.reserve(spec.size());
  for (const auto& ex : spec.examples) traces.push_back(evaluate(candidate, ex.input, registry).trace);
  return traces;
}

bool traces_satisfy(const CandidateTraces& traces, const Spec& spec) {
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (traces[j].empty() || traces[j].back() != spec.examples[j].output) return false;
  }
  return true;
}

std::vector<double> FitnessModel::score_batch(const Spec& spec, std::span<const Program> candidates,
                                              std::span<const CandidateTraces> traces) const {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) out.push_back(score(spec, candidates[i], traces[i]));
  return out;
}

OracleModel::OracleModel(Program target, Metric metric, std::size_t registry_size, LcsMode mode)
    : target_(std::move(target)), metric_(metric), registry_size_(registry_size), mode_(mode) {}

double OracleModel::score(const Spec& spec, const Program& candidate, std::span<const Trace>) const {
  return oracle_fitness(spec, candidate, target_, metric_, registry_size_, mode_).value;
}

std::optional<ProbabilityMap> OracleModel::pmap(const Spec&) const {
  if (metric_ != Metric::FunctionProbability) return std::nullopt;
  return membership(target_, registry_size_);
}

ScoreKind OracleModel::kind() const {
  switch (metric_) {
    case Metric::CommonFunctions: return ScoreKind::CF;
    case Metric::LongestCommon: return ScoreKind::LCS;
    case Metric::FunctionProbability: return ScoreKind::FP;
  }
  return ScoreKind::Model;
}

// --- sidecar client ---------------------------------------------------------

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json traces_json(const CandidateTraces& traces) {
  json per_example = json::array();
  for (const auto& t : traces) per_example.push_back(trace_to_json(t));
  return per_example;
}

}  // namespace

SidecarModel::SidecarModel(const std::string& command, const Registry& registry)
    : registry_size_(registry.size()), registry_hash_(hex64(registry.hash())) {
  // A dead child must surface as a failed write, not kill the process.
  std::signal(SIGPIPE, SIG_IGN);

  int down[2];
  int up[2];
  if (pipe(down) != 0) throw ModelUnavailable("pipe() failed");
  if (pipe(up) != 0) {
    close(down[0]);
    close(down[1]);
    throw ModelUnavailable("pipe() failed");
  }
  pid_ = fork();
  if (pid_ < 0) {
    for (int fd : {down[0], down[1], up[0], up[1]}) close(fd);
    throw ModelUnavailable("fork() failed");
  }
  if (pid_ == 0) {
    dup2(down[0], STDIN_FILENO);
    dup2(up[1], STDOUT_FILENO);
    for (int fd : {down[0], down[1], up[0], up[1]}) close(fd);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(down[0]);
  close(up[1]);
  to_child_ = fdopen(down[1], "w");
  from_child_ = fdopen(up[0], "r");
  if (!to_child_ || !from_child_) throw ModelUnavailable("fdopen() failed");
}

SidecarModel::~SidecarModel() {
  if (to_child_) std::fclose(to_child_);
  if (from_child_) std::fclose(from_child_);
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 100; ++i) {
      if (waitpid(pid_, &status, WNOHANG) == pid_) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
  }
}

std::string SidecarModel::exchange(const std::string& request_line) const {
  if (std::fputs(request_line.c_str(), to_child_) < 0 || std::fputc('\n', to_child_) == EOF ||
      std::fflush(to_child_) != 0) {
    throw ModelUnavailable("model process is not accepting requests");
  }
  std::string line;
  int c = 0;
  while ((c = std::fgetc(from_child_)) != EOF && c != '\n') line.push_back(static_cast<char>(c));
  if (c == EOF && line.empty()) throw ModelUnavailable("model process closed its output");
  return line;
}

std::vector<double> SidecarModel::score_batch(const Spec& spec, std::span<const Program> candidates,
                                              std::span<const CandidateTraces> traces) const {
  std::vector<double> scores;
  scores.reserve(candidates.size());
  const json io = io_to_json(spec);
  std::lock_guard lock(mutex_);
  for (std::size_t begin = 0; begin < candidates.size(); begin += kMaxBatch) {
    const std::size_t end = std::min(candidates.size(), begin + kMaxBatch);
    const std::int64_t id = next_id_++;
    json req{{"id", id}, {"op", "score"}, {"registry", registry_hash_}, {"io", io}};
    json cands = json::array();
    json trs = json::array();
    for (std::size_t i = begin; i < end; ++i) {
      cands.push_back(ids_to_json(candidates[i]));
      trs.push_back(traces_json(traces[i]));
    }
    req["candidates"] = std::move(cands);
    req["traces"] = std::move(trs);

    json resp;
    try {
      resp = json::parse(exchange(req.dump()));
    } catch (const json::parse_error& e) {
      throw ModelUnavailable(std::string("malformed model response: ") + e.what());
    }
    if (!resp.is_object() || resp.value("id", std::int64_t{-1}) != id) {
      throw ModelUnavailable("model response id does not match request " + std::to_string(id));
    }
    if (resp.contains("error")) throw ModelUnavailable("model error: " + resp["error"].dump());
    if (!resp.contains("scores")) throw ModelUnavailable("model response has no scores");
    const auto& s = resp["scores"];
    if (!s.is_array() || s.size() != end - begin) throw ModelUnavailable("model returned the wrong number of scores");
    for (const auto& v : s) {
      if (!v.is_number()) throw ModelUnavailable("non-numeric model score");
      scores.push_back(v.get<double>());
    }
  }
  return scores;
}

double SidecarModel::score(const Spec& spec, const Program& candidate, std::span<const Trace> traces) const {
  const Program cands[1] = {candidate};
  const CandidateTraces trs[1] = {CandidateTraces(traces.begin(), traces.end())};
  return score_batch(spec, cands, trs).front();
}

std::optional<ProbabilityMap> SidecarModel::pmap(const Spec& spec) const {
  std::lock_guard lock(mutex_);
  const std::int64_t id = next_id_++;
  const json req{{"id", id}, {"op", "pmap"}, {"registry", registry_hash_}, {"io", io_to_json(spec)}};
  json resp;
  try {
    resp = json::parse(exchange(req.dump()));
  } catch (const json::parse_error& e) {
    throw ModelUnavailable(std::string("malformed model response: ") + e.what());
  }
  if (!resp.is_object() || resp.value("id", std::int64_t{-1}) != id) {
    throw ModelUnavailable("model response id does not match request " + std::to_string(id));
  }
  if (resp.contains("error")) return std::nullopt;
  if (!resp.contains("pmap") || !resp["pmap"].is_array()) throw ModelUnavailable("model response has no pmap");
  ProbabilityMap p;
  for (const auto& v : resp["pmap"]) {
    if (!v.is_number()) throw ModelUnavailable("non-numeric probability from model");
    p.push_back(v.get<double>());
  }
  try {
    validate_pmap(p, registry_size_);
  } catch (const std::invalid_argument& e) {
    throw ModelUnavailable(std::string("bad probability map from model: ") + e.what());
  }
  return p;
}

}  // namespace progsyn
