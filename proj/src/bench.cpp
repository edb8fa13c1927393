#include "slicmag/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "slicmag/image_io.hpp"

namespace slicmag {

namespace fs = std::filesystem;

namespace {

bool is_candidate(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".ppm" || ext == ".pgm" || ext == ".pnm";
}

RasterImage to_rgb(const RasterImage& img) {
    if (img.space() == ColorSpace::RGB) return img;
    // Gray input: replicate the single plane.
    return RasterImage({img.plane(0), img.plane(0), img.plane(0)}, ColorSpace::RGB);
}

RasterImage center_crop_square(const RasterImage& img) {
    const int side = std::min(img.width(), img.height());
    const int x0 = (img.width() - side) / 2;
    const int y0 = (img.height() - side) / 2;
    if (side == img.width() && side == img.height()) return img;
    std::vector<Plane> planes;
    for (const Plane& p : img.planes()) {
        Plane q(side, side);
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) q.at(x, y) = p.at(x0 + x, y0 + y);
        planes.push_back(std::move(q));
    }
    return RasterImage(std::move(planes), img.space());
}

std::string fmt2(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string cell(const std::optional<double>& v) { return v ? fmt2(*v) : "err"; }

}  // namespace

BenchRun run_benchmark(const std::string& dataset_dir, const BenchOptions& opts) {
    opts.pipeline.validate();
    if (!fs::is_directory(dataset_dir))
        throw FileAccessError(dataset_dir + ": not a directory");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dataset_dir))
        if (entry.is_regular_file() && is_candidate(entry.path())) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw FileAccessError(dataset_dir + ": no PNG/PPM/PGM images found");

    BenchRun run;
    run.dataset = fs::path(dataset_dir).filename().string();

    PipelineConfig cubic_cfg = opts.pipeline;
    cubic_cfg.base_interp = InterpMethod::Bicubic;
    PipelineConfig linear_cfg = opts.pipeline;
    linear_cfg.base_interp = InterpMethod::Bilinear;

    for (const fs::path& f : files) {
        BenchRow row;
        row.image_id = f.filename().string();
        try {
            const RasterImage gt = resize_image(center_crop_square(to_rgb(load_image(f.string()))),
                                                opts.gt_size, opts.gt_size, InterpMethod::Bicubic);
            const RasterImage lr = resize_image(gt, opts.lr_size, opts.lr_size, opts.downscale);
            const int scale = opts.gt_size / opts.lr_size;

            auto score = [&](const RasterImage& out) {
                return psnr(out, gt, opts.psnr_channel, opts.crop_border).psnr_db;
            };
            row.bicubic = score(enlarge_baseline(lr, scale, InterpMethod::Bicubic));
            row.slic_bicubic = score(enlarge(lr, cubic_cfg));
            row.bilinear = score(enlarge_baseline(lr, scale, InterpMethod::Bilinear));
            row.slic_bilinear = score(enlarge(lr, linear_cfg));
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        run.rows.push_back(std::move(row));
    }

    int complete = 0;
    for (const BenchRow& row : run.rows) {
        if (!row.complete()) continue;
        ++complete;
        run.avg_bicubic += *row.bicubic;
        run.avg_slic_bicubic += *row.slic_bicubic;
        run.avg_bilinear += *row.bilinear;
        run.avg_slic_bilinear += *row.slic_bilinear;
    }
    if (complete > 0) {
        run.avg_bicubic /= complete;
        run.avg_slic_bicubic /= complete;
        run.avg_bilinear /= complete;
        run.avg_slic_bilinear /= complete;
    }

    std::ostringstream cfg;
    cfg << "scale=" << opts.pipeline.scale << " segments=" << opts.pipeline.slic.k
        << " compactness=" << opts.pipeline.slic.compactness
        << " max_iters=" << opts.pipeline.slic.max_iters << " window=" << opts.pipeline.window
        << " dilation_passes=" << opts.pipeline.dilation_passes
        << " pad_margin=" << opts.pipeline.pad_margin;
    run.config_lines.push_back(cfg.str());
    std::ostringstream proto;
    proto << "gt_size=" << opts.gt_size << " lr_size=" << opts.lr_size
          << " downscale=" << to_string(opts.downscale) << " psnr="
          << (opts.psnr_channel == PsnrChannel::RgbJoint ? "rgb-joint" : "y-only")
          << " crop_border=" << opts.crop_border;
    run.config_lines.push_back(proto.str());
    run.config_lines.push_back(
        "note: outputs are compared against the full-size ground truth "
        "(the only dimensionally consistent protocol)");
    return run;
}

std::string emit_table(const BenchRun& run, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        out << "image,bicubic,slic_bicubic,bilinear,slic_bilinear\n";
        for (const BenchRow& row : run.rows) {
            if (row.complete())
                out << row.image_id << ',' << cell(row.bicubic) << ',' << cell(row.slic_bicubic)
                    << ',' << cell(row.bilinear) << ',' << cell(row.slic_bilinear) << '\n';
            else
                out << row.image_id << ",err,err,err,err\n";
        }
        if (!run.rows.empty())
            out << "average," << fmt2(run.avg_bicubic) << ',' << fmt2(run.avg_slic_bicubic) << ','
                << fmt2(run.avg_bilinear) << ',' << fmt2(run.avg_slic_bilinear) << '\n';
        for (const std::string& line : run.config_lines) out << "# " << line << '\n';
    } else {
        out << "| Image | Bicubic | SLIC based bicubic | Bilinear | SLIC based bilinear |\n";
        out << "|---|---|---|---|---|\n";
        for (const BenchRow& row : run.rows)
            out << "| " << row.image_id << " | " << cell(row.bicubic) << " | "
                << cell(row.slic_bicubic) << " | " << cell(row.bilinear) << " | "
                << cell(row.slic_bilinear) << " |\n";
        if (!run.rows.empty())
            out << "| Average | " << fmt2(run.avg_bicubic) << " | " << fmt2(run.avg_slic_bicubic)
                << " | " << fmt2(run.avg_bilinear) << " | " << fmt2(run.avg_slic_bilinear)
                << " |\n";
        for (const std::string& line : run.config_lines) out << "\n<!-- " << line << " -->";
        out << '\n';
    }
    return out.str();
}

}  // namespace slicmag
