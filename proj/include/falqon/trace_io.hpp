// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "falqon/experiments.hpp"
#include "falqon/feedback.hpp"

namespace falqon {

// Trace CSV schema v1: one row per executed layer with columns
//   layer,beta,A,energy,r_A,phi,cumulative_samples
// The layer-0 (initial state) snapshot lives in the run metadata JSON.
inline constexpr int kTraceSchemaVersion = 1;

std::string trace_to_csv(const FeedbackRun& run);
void write_trace_csv(const std::string& path, const FeedbackRun& run);

/// Run metadata: config echo, instance summary, tau = 2 dt, initial-state
/// snapshot, cost ledger, and the best sampled bitstring.
std::string run_metadata_json(const RunConfig& cfg, const FeedbackRun& run, const Graph& g,
                              const std::string& instance_path);

std::string critical_dt_report_json(const CriticalDtReport& report);
std::string threshold_report_json(const ThresholdReport& report);
std::string cost_report_json(const CostReport& report);

std::string aggregate_to_csv(const AggregateTrace& agg);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace falqon
