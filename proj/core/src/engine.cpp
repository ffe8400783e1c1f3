#include "burning/engine.hpp"

#include <algorithm>
#include <limits>

namespace burning {

const char* to_string(BurnErrc code) {
  switch (code) {
    case BurnErrc::SourceAlreadyBurned: return "source already burned";
    case BurnErrc::LengthMismatch: return "length mismatch";
    case BurnErrc::Disconnected: return "graph is disconnected";
    case BurnErrc::InvalidSource: return "invalid source";
  }
  return "unknown";
}

BurningSequence::BurningSequence(std::vector<Vertex> sources) : sources_(std::move(sources)) {
  if (sources_.empty()) throw std::invalid_argument("burning sequence must be nonempty");
  std::vector<Vertex> sorted = sources_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("burning sequence repeats a vertex");
  }
}

Schedule::Schedule(std::vector<Entry> rounds) : rounds_(std::move(rounds)) {
  if (rounds_.empty() || !rounds_.front()) {
    throw std::invalid_argument("schedule must start with a source in round 1");
  }
}

Schedule Schedule::from_sequence(const BurningSequence& seq) {
  return Schedule(std::vector<Entry>(seq.begin(), seq.end()));
}

std::size_t Schedule::empty_rounds() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rounds_.begin(), rounds_.end(), [](const Entry& e) { return !e; }));
}

BurnProcess::BurnProcess(const Graph& g) : graph_(&g), label_(g.vertex_count(), 0) {}

void BurnProcess::advance(std::optional<Vertex> source) {
  const int r = ++round_;
  if (source) {
    if (!graph_->has_vertex(*source)) {
      throw BurnError(BurnErrc::InvalidSource,
                      "round " + std::to_string(r) + ": vertex " + std::to_string(*source) +
                          " does not exist",
                      r, *source);
    }
    if (label_[*source] != 0) {
      throw BurnError(BurnErrc::SourceAlreadyBurned,
                      "round " + std::to_string(r) + ": source " + std::to_string(*source) +
                          " is already burned",
                      r, *source);
    }
  }
  std::vector<Vertex> next;
  for (Vertex u : frontier_) {
    for (Vertex w : graph_->neighbors(u)) {
      if (label_[w] == 0) {
        label_[w] = r;
        next.push_back(w);
      }
    }
  }
  if (source && label_[*source] == 0) {
    label_[*source] = r;
    next.push_back(*source);
  }
  burned_ += next.size();
  frontier_ = std::move(next);
}

RoundLabeling BurnProcess::labeling() const {
  RoundLabeling out{label_, 0};
  for (int l : label_) out.total_rounds = std::max(out.total_rounds, l);
  return out;
}

RoundLabeling simulate(const Graph& g, const Schedule& s) {
  if (!g.is_connected()) throw BurnError(BurnErrc::Disconnected, "graph is disconnected");
  BurnProcess process(g);
  for (const auto& entry : s.rounds()) {
    if (process.finished() && !entry) continue;
    process.advance(entry);
  }
  while (!process.finished()) process.advance(std::nullopt);
  return process.labeling();
}

RoundLabeling validate_sequence(const Graph& g, const BurningSequence& seq) {
  auto labeling = simulate(g, Schedule::from_sequence(seq));
  if (static_cast<std::size_t>(labeling.total_rounds) != seq.length()) {
    throw BurnError(BurnErrc::LengthMismatch,
                    "process terminates in " + std::to_string(labeling.total_rounds) +
                        " rounds, sequence has length " + std::to_string(seq.length()),
                    0, -1, labeling.total_rounds);
  }
  return labeling;
}

BurningSequence canonicalize(const Graph& g, const Schedule& s) {
  const auto labeling = simulate(g, s);
  std::vector<Vertex> lowest(static_cast<std::size_t>(labeling.total_rounds) + 1,
                             std::numeric_limits<Vertex>::max());
  for (std::size_t v = 0; v < labeling.label.size(); ++v) {
    auto& slot = lowest[labeling.label[v]];
    slot = std::min(slot, static_cast<Vertex>(v));
  }
  std::vector<Vertex> out;
  out.reserve(lowest.size() - 1);
  for (std::size_t r = 1; r < lowest.size(); ++r) {
    const bool scheduled = r <= s.length() && s[r - 1].has_value();
    out.push_back(scheduled ? *s[r - 1] : lowest[r]);
  }
  return BurningSequence(std::move(out));
}

}  // namespace burning
