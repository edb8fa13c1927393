#pragma once

#include <optional>
#include <string>

#include "slicmag/metrics.hpp"
#include "slicmag/pipeline.hpp"

namespace slicmag {

struct BenchRow {
    std::string image_id;
    std::optional<double> bicubic;
    std::optional<double> slic_bicubic;
    std::optional<double> bilinear;
    std::optional<double> slic_bilinear;
    std::string error;  ///< nonempty when the image could not be processed

    bool complete() const {
        return bicubic && slic_bicubic && bilinear && slic_bilinear;
    }
};

struct BenchRun {
    std::string dataset;
    std::vector<BenchRow> rows;
    double avg_bicubic = 0.0;
    double avg_slic_bicubic = 0.0;
    double avg_bilinear = 0.0;
    double avg_slic_bilinear = 0.0;

    /// Config snapshot lines for the table's trailing comment block.
    std::vector<std::string> config_lines;
};

struct BenchOptions {
    PipelineConfig pipeline;
    InterpMethod downscale = InterpMethod::Bicubic;
    int gt_size = 256;
    int lr_size = 64;
    PsnrChannel psnr_channel = PsnrChannel::RgbJoint;
    int crop_border = 0;
};

/// Runs the four-arm comparison (bicubic, SLIC-bicubic, bilinear, SLIC-bilinear)
/// over every decodable image in dataset_dir, in sorted filename order.
/// Ground truth: center-crop to square, resize to gt_size; LR: downscale of GT.
BenchRun run_benchmark(const std::string& dataset_dir, const BenchOptions& opts);

enum class TableFormat { Csv, Markdown };

std::string emit_table(const BenchRun& run, TableFormat format);

}  // namespace slicmag
