#pragma once

#include <cstddef>
#include <vector>

#include "mscg/pipeline.hpp"
#include "mscg/transcript.hpp"

namespace mscg {

// Summarizes every document; output order follows input order. A document
// that throws yields a bundle with `error` set instead of aborting the run.
// jobs == 0 uses the OpenMP default thread count.
std::vector<SummaryBundle> summarize_batch(const std::vector<Document>& docs, const PipelineConfig& cfg,
                                           const PipelineResources& res, std::size_t jobs = 0);

// Single-threaded reference for summarize_batch.
std::vector<SummaryBundle> summarize_batch_serial(const std::vector<Document>& docs, const PipelineConfig& cfg,
                                                  const PipelineResources& res);

SummaryBundle summarize_or_error(const Document& doc, const PipelineConfig& cfg, const PipelineResources& res);

}  // namespace mscg
