#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <stdexcept>

#include "slicmag/image_io.hpp"
#include "slicmag/metrics.hpp"
#include "slicmag/pipeline.hpp"
#include "slicmag/resample.hpp"
#include "slicmag/slic.hpp"

namespace py = pybind11;
using namespace slicmag;

namespace {

// (H, W) or (H, W, 3) uint8 array -> RasterImage.
RasterImage from_array(const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() == 2) {
        const int h = static_cast<int>(a.shape(0)), w = static_cast<int>(a.shape(1));
        Plane p(w, h);
        std::memcpy(p.samples().data(), a.data(), p.samples().size());
        return RasterImage({std::move(p)}, ColorSpace::Gray);
    }
    if (a.ndim() == 3 && a.shape(2) == 3) {
        const int h = static_cast<int>(a.shape(0)), w = static_cast<int>(a.shape(1));
        std::vector<Plane> planes{Plane(w, h), Plane(w, h), Plane(w, h)};
        const uint8_t* src = a.data();
        for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i)
            for (int c = 0; c < 3; ++c) planes[c].samples()[i] = src[3 * i + c];
        return RasterImage(std::move(planes), ColorSpace::RGB);
    }
    throw std::invalid_argument("expected a (H, W) or (H, W, 3) uint8 array");
}

py::array to_array(const RasterImage& img) {
    const int w = img.width(), h = img.height();
    if (img.space() == ColorSpace::Gray) {
        py::array_t<uint8_t> out({h, w});
        std::memcpy(out.mutable_data(), img.plane(0).samples().data(),
                    static_cast<size_t>(w) * h);
        return out;
    }
    py::array_t<uint8_t> out({h, w, 3});
    uint8_t* dst = out.mutable_data();
    for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i)
        for (int c = 0; c < 3; ++c) dst[3 * i + c] = img.plane(c).samples()[i];
    return out;
}

PipelineConfig make_config(int scale, const std::string& interp, int k, double compactness,
                           int max_iters, int window, int dilation_passes) {
    PipelineConfig cfg;
    cfg.scale = scale;
    cfg.base_interp = parse_interp(interp);
    cfg.slic.k = k;
    cfg.slic.compactness = compactness;
    cfg.slic.max_iters = max_iters;
    cfg.window = window;
    cfg.dilation_passes = dilation_passes;
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_slicmag, m) {
    m.doc() = "Superpixel-guided image enlargement";

    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("load", [](const std::string& path) { return to_array(load_image(path)); },
          py::arg("path"), "Load a PNG/PPM/PGM image as a uint8 array.");

    m.def("save",
          [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a,
             const std::string& path) { save_image(from_array(a), path); },
          py::arg("image"), py::arg("path"), "Save a uint8 array as PNG/PPM/PGM.");

    m.def("resize",
          [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a, int width,
             int height, const std::string& interp) {
              return to_array(resize_image(from_array(a), width, height, parse_interp(interp)));
          },
          py::arg("image"), py::arg("width"), py::arg("height"), py::arg("interp") = "bicubic");

    m.def("segment",
          [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a, int k,
             double compactness, int max_iters) {
              SlicParams params;
              params.k = k;
              params.compactness = compactness;
              params.max_iters = max_iters;
              const LabelMap lm = slic_segment(from_array(a), params);
              py::array_t<int32_t> out({lm.height(), lm.width()});
              int32_t* dst = out.mutable_data();
              for (size_t i = 0; i < lm.labels().size(); ++i)
                  dst[i] = static_cast<int32_t>(lm.labels()[i]);
              return out;
          },
          py::arg("image"), py::arg("k") = 100, py::arg("compactness") = 10.0,
          py::arg("max_iters") = 10, "SLIC superpixel label map as an int32 array.");

    m.def("enlarge",
          [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a, int scale,
             const std::string& interp, int k, double compactness, int max_iters, int window,
             int dilation_passes) {
              return to_array(enlarge(from_array(a),
                                      make_config(scale, interp, k, compactness, max_iters,
                                                  window, dilation_passes)));
          },
          py::arg("image"), py::arg("scale") = 4, py::arg("interp") = "bicubic",
          py::arg("k") = 100, py::arg("compactness") = 10.0, py::arg("max_iters") = 10,
          py::arg("window") = 5, py::arg("dilation_passes") = 1,
          "Segment-isolated enlargement of an RGB image.");

    m.def("enlarge_baseline",
          [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a, int scale,
             const std::string& interp) {
              return to_array(enlarge_baseline(from_array(a), scale, parse_interp(interp)));
          },
          py::arg("image"), py::arg("scale") = 4, py::arg("interp") = "bicubic",
          "Plain interpolation enlargement (comparison arm).");

    m.def("psnr",
          [](const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& a,
             const py::array_t<uint8_t, py::array::c_style | py::array::forcecast>& b,
             bool luma_only, int crop_border) {
              const QualityReport r =
                  psnr(from_array(a), from_array(b),
                       luma_only ? PsnrChannel::LumaOnly : PsnrChannel::RgbJoint, crop_border);
              return r.psnr_db;  // +inf when the images are identical
          },
          py::arg("a"), py::arg("b"), py::arg("luma_only") = false, py::arg("crop_border") = 0,
          "PSNR in dB between two images of identical shape.");
}
