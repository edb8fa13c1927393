#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "slicmag/bench.hpp"
#include "slicmag/image_io.hpp"
#include "slicmag/pipeline.hpp"
#include "slicmag/slic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitProcessing = 3;

struct CommonOpts {
    int scale = 4;
    std::string interp = "bicubic";
    int segments = 100;
    double compactness = 10.0;
    int iters = 10;
    int window = 5;
    int dilation_passes = 1;
    int pad_margin = 2;
};

void add_pipeline_flags(CLI::App& cmd, CommonOpts& o) {
    cmd.add_option("--scale", o.scale, "Integer enlargement factor")->capture_default_str();
    cmd.add_option("--interp", o.interp, "bilinear|bicubic")->capture_default_str();
    cmd.add_option("--segments", o.segments, "Requested SLIC superpixel count")
        ->capture_default_str();
    cmd.add_option("--compactness", o.compactness, "SLIC spatial weight m")
        ->capture_default_str();
    cmd.add_option("--iters", o.iters, "SLIC iteration cap")->capture_default_str();
    cmd.add_option("--window", o.window, "Odd conditional-dilation window size")
        ->capture_default_str();
    cmd.add_option("--dilation-passes", o.dilation_passes, "Conditional dilation passes")
        ->capture_default_str();
    cmd.add_option("--pad-margin", o.pad_margin, "Replicate padding before segmentation")
        ->capture_default_str();
}

slicmag::PipelineConfig to_config(const CommonOpts& o) {
    slicmag::PipelineConfig cfg;
    cfg.scale = o.scale;
    cfg.base_interp = slicmag::parse_interp(o.interp);
    cfg.slic.k = o.segments;
    cfg.slic.compactness = o.compactness;
    cfg.slic.max_iters = o.iters;
    cfg.window = o.window;
    cfg.dilation_passes = o.dilation_passes;
    cfg.pad_margin = o.pad_margin;
    cfg.validate();
    return cfg;
}

void dump_trace(const slicmag::PipelineTrace& t, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    using slicmag::ColorSpace;
    using slicmag::RasterImage;
    auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };
    if (t.guide) slicmag::save_image(*t.guide, path("fig5_guide.png"));
    if (t.label_overlay) slicmag::save_image(*t.label_overlay, path("fig6_slic.png"));
    auto save_plane = [&](const slicmag::Plane& p, const char* name) {
        slicmag::save_image(RasterImage({p}, ColorSpace::Gray), path(name));
    };
    if (t.mask_a) save_plane(*t.mask_a, "fig7_mask_a.png");
    if (t.mask_b) save_plane(*t.mask_b, "fig8_mask_b.png");
    if (t.dilated) save_plane(*t.dilated, "fig9_dilated.png");
    if (t.upscaled) save_plane(*t.upscaled, "fig10_upscaled.png");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLIC-segmented image enlargement"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    CommonOpts opts;
    std::string input, output, trace_dir;

    CLI::App* enlarge = app.add_subcommand("enlarge", "Segment-isolated enlargement");
    enlarge->add_option("-i,--input", input, "Input image (PNG/PPM/PGM)")->required();
    enlarge->add_option("-o,--output", output, "Output image path")->required();
    enlarge->add_option("--trace", trace_dir, "Directory for stage debug images");
    add_pipeline_flags(*enlarge, opts);

    CLI::App* baseline = app.add_subcommand("baseline", "Plain interpolation enlargement");
    baseline->add_option("-i,--input", input)->required();
    baseline->add_option("-o,--output", output)->required();
    baseline->add_option("--scale", opts.scale)->capture_default_str();
    baseline->add_option("--interp", opts.interp, "nearest|bilinear|bicubic")
        ->capture_default_str();

    CLI::App* segment = app.add_subcommand("segment", "Write a segment-boundary overlay");
    segment->add_option("-i,--input", input)->required();
    segment->add_option("-o,--output", output)->required();
    add_pipeline_flags(*segment, opts);

    std::string dataset_dir, table_out, format = "csv", downscale = "bicubic",
                psnr_channel = "rgb";
    int crop_border = 0;
    CLI::App* bench = app.add_subcommand("benchmark", "Four-arm PSNR comparison harness");
    bench->add_option("-d,--dataset", dataset_dir, "Directory of images")->required();
    bench->add_option("-o,--output", table_out, "Table file (default: stdout)");
    bench->add_option("--format", format, "csv|md")->capture_default_str();
    bench->add_option("--downscale", downscale, "GT->LR kernel")->capture_default_str();
    bench->add_option("--psnr-channel", psnr_channel, "rgb|y")->capture_default_str();
    bench->add_option("--crop-border", crop_border, "Pixels trimmed before PSNR")
        ->capture_default_str();
    add_pipeline_flags(*bench, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enlarge) {
            const auto img = slicmag::load_image(input);
            slicmag::PipelineTrace trace;
            const bool tracing = !trace_dir.empty();
            const auto out =
                slicmag::enlarge(img, to_config(opts), tracing ? &trace : nullptr);
            slicmag::save_image(out, output);
            if (tracing) dump_trace(trace, trace_dir);
        } else if (*baseline) {
            const auto img = slicmag::load_image(input);
            const auto out =
                slicmag::enlarge_baseline(img, opts.scale, slicmag::parse_interp(opts.interp));
            slicmag::save_image(out, output);
        } else if (*segment) {
            const auto img = slicmag::load_image(input);
            const auto cfg = to_config(opts);
            const auto hr = slicmag::resize_image(img, img.width() * cfg.scale,
                                                  img.height() * cfg.scale, cfg.base_interp);
            const auto lm = slicmag::slic_segment(hr, cfg.slic);
            slicmag::save_image(slicmag::boundary_overlay(hr, lm), output);
        } else if (*bench) {
            slicmag::BenchOptions bo;
            bo.pipeline = to_config(opts);
            bo.downscale = slicmag::parse_interp(downscale);
            bo.crop_border = crop_border;
            if (psnr_channel == "y")
                bo.psnr_channel = slicmag::PsnrChannel::LumaOnly;
            else if (psnr_channel != "rgb")
                throw std::invalid_argument("--psnr-channel must be rgb or y");
            slicmag::TableFormat fmt;
            if (format == "csv")
                fmt = slicmag::TableFormat::Csv;
            else if (format == "md")
                fmt = slicmag::TableFormat::Markdown;
            else
                throw std::invalid_argument("--format must be csv or md");

            const auto run = slicmag::run_benchmark(dataset_dir, bo);
            const std::string table = slicmag::emit_table(run, fmt);
            if (table_out.empty()) {
                std::cout << table;
            } else {
                std::ofstream out(table_out);
                if (!out) throw slicmag::FileAccessError(table_out + ": cannot open");
                out << table;
            }
        }
    } catch (const slicmag::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitProcessing;
    }
    return kExitOk;
}
