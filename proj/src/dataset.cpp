#include "mhscg/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mhscg {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_cell(const std::string& token, const fs::path& path, int line, int col) {
    const std::string t = trim(token);
    if (!t.empty()) {
        try {
            std::size_t consumed = 0;
            const double v = std::stod(t, &consumed);
            if (consumed == t.size()) return v;
        } catch (const std::exception&) {
        }
    }
    std::ostringstream msg;
    msg << path.string() << ":" << line << ":" << col << ": non-numeric cell '" << t << "'";
    throw std::runtime_error(msg.str());
}

}  // namespace

Matrix load_csv_matrix(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path.string());

    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string token;
        int col = 0;
        while (std::getline(ss, token, ',')) {
            ++col;
            row.push_back(parse_cell(token, path, lineno, col));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            std::ostringstream msg;
            msg << path.string() << ":" << lineno << ": expected " << rows.front().size()
                << " columns, found " << row.size();
            throw std::runtime_error(msg.str());
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix file: " + path.string());

    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

void save_csv_matrix(const Matrix& m, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path.string());
    char buf[48];
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<int> load_labels(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open label file: " + path.string());
    std::vector<int> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        try {
            std::size_t consumed = 0;
            const int v = std::stoi(t, &consumed);
            if (consumed != t.size()) throw std::invalid_argument(t);
            labels.push_back(v);
        } catch (const std::exception&) {
            std::ostringstream msg;
            msg << path.string() << ":" << lineno << ": non-integer label '" << t << "'";
            throw std::runtime_error(msg.str());
        }
    }
    if (labels.empty()) throw std::runtime_error("empty label file: " + path.string());
    return labels;
}

std::vector<int> load_labels(const fs::path& path, int k) {
    std::vector<int> labels = load_labels(path);
    int lo = labels.front(), hi = labels.front();
    for (int v : labels) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == 1 && hi == k) {
        std::cerr << "note: labels in " << path.string()
                  << " look 1-based (min 1, max " << k << "); re-basing to 0-based\n";
        for (int& v : labels) --v;
    }
    return labels;
}

void save_labels(const std::vector<int>& labels, const fs::path& path) {
    if (labels.empty()) throw std::invalid_argument("save_labels: empty label list");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write label file: " + path.string());
    for (int v : labels) out << v << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

DatasetManifest load_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("manifest parse error in " + path.string() + ": " + e.what());
    }

    DatasetManifest m;
    try {
        m.name = j.value("name", std::string{});
        m.k = j.at("k").get<int>();
        for (const auto& v : j.at("views")) m.view_paths.emplace_back(v.get<std::string>());
        if (j.contains("labels") && !j["labels"].is_null())
            m.labels_path = fs::path(j["labels"].get<std::string>());
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed manifest " + path.string() + ": " + e.what());
    }
    if (m.view_paths.empty())
        throw std::runtime_error("manifest " + path.string() + " lists no views");

    const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
    for (auto& p : m.view_paths)
        if (p.is_relative()) p = base / p;
    if (m.labels_path && m.labels_path->is_relative()) m.labels_path = base / *m.labels_path;
    return m;
}

MultiViewDataset load_dataset(const fs::path& manifest_path) {
    const DatasetManifest m = load_manifest(manifest_path);

    MultiViewDataset ds;
    ds.name = m.name;
    ds.k = m.k;
    for (const auto& p : m.view_paths) ds.views.push_back(load_csv_matrix(p));

    const Index n = ds.views.front().rows();
    for (std::size_t l = 1; l < ds.views.size(); ++l) {
        if (ds.views[l].rows() != n) {
            std::ostringstream msg;
            msg << "row-count mismatch across views: view 0 has " << n << " rows, view " << l
                << " has " << ds.views[l].rows();
            throw std::runtime_error(msg.str());
        }
    }
    if (m.labels_path) ds.labels = load_labels(*m.labels_path, ds.k);

    validate(ds);
    return ds;
}

void save_dataset(const MultiViewDataset& ds, const fs::path& dir) {
    validate(ds);
    fs::create_directories(dir);

    json manifest;
    manifest["name"] = ds.name;
    manifest["k"] = ds.k;
    json views = json::array();
    for (int l = 0; l < ds.n_views(); ++l) {
        const std::string fname = "view_" + std::to_string(l + 1) + ".csv";
        save_csv_matrix(ds.views[l], dir / fname);
        views.push_back(fname);
    }
    manifest["views"] = views;
    if (ds.labels) {
        save_labels(*ds.labels, dir / "labels.csv");
        manifest["labels"] = "labels.csv";
    }

    std::ofstream out(dir / "manifest.json");
    if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
    out << manifest.dump(2) << '\n';
}

MultiViewDataset synth_multiview(int n_per_cluster, int k, int r,
                                 const std::vector<int>& dims, double noise_std,
                                 std::uint64_t seed) {
    if (n_per_cluster < 1) throw std::invalid_argument("synth_multiview: n_per_cluster < 1");
    if (k < 2) throw std::invalid_argument("synth_multiview: k < 2");
    if (r < 1) throw std::invalid_argument("synth_multiview: r < 1");
    if (static_cast<int>(dims.size()) != r)
        throw std::invalid_argument("synth_multiview: dims length != r");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("synth_multiview: view dimension < 1");
    if (noise_std < 0) throw std::invalid_argument("synth_multiview: negative noise_std");

    constexpr double kCenterRadius = 10.0;
    const int n = k * n_per_cluster;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    MultiViewDataset ds;
    ds.k = k;
    ds.name = "synth-k" + std::to_string(k) + "-n" + std::to_string(n) + "-seed" +
              std::to_string(seed);

    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i / n_per_cluster;

    for (int l = 0; l < r; ++l) {
        const int d = dims[l];
        Matrix centers(k, d);
        for (int c = 0; c < k; ++c) {
            Vector dir(d);
            double norm = 0.0;
            do {
                for (int j = 0; j < d; ++j) dir[j] = gauss(rng);
                norm = dir.norm();
            } while (norm < 1e-12);
            centers.row(c) = (kCenterRadius / norm) * dir.transpose();
        }
        Matrix x(n, d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) x(i, j) = centers(labels[i], j) + noise_std * gauss(rng);
        ds.views.push_back(std::move(x));
    }
    ds.labels = std::move(labels);
    validate(ds);
    return ds;
}

void validate(const MultiViewDataset& ds) {
    if (ds.views.empty()) throw std::invalid_argument("dataset has no views");
    const Index n = ds.views.front().rows();
    if (n < 2) throw std::invalid_argument("dataset needs at least 2 samples");
    for (int l = 0; l < ds.n_views(); ++l) {
        const Matrix& v = ds.views[l];
        if (v.rows() != n)
            throw std::invalid_argument("view " + std::to_string(l) +
                                        " row count differs from view 0");
        if (v.cols() < 1)
            throw std::invalid_argument("view " + std::to_string(l) + " has no features");
        if (!v.allFinite())
            throw std::invalid_argument("view " + std::to_string(l) +
                                        " contains a non-finite entry");
    }
    if (ds.k < 1 || static_cast<Index>(ds.k) > n)
        throw std::invalid_argument("cluster count k must satisfy 1 <= k <= n");
    if (ds.labels) {
        if (static_cast<Index>(ds.labels->size()) != n)
            throw std::invalid_argument("label count differs from sample count");
        for (int v : *ds.labels)
            if (v < 0 || v >= ds.k)
                throw std::invalid_argument("label " + std::to_string(v) +
                                            " outside [0, k)");
    }
}

void minmax_scale(MultiViewDataset& ds) {
    for (Matrix& v : ds.views) {
        for (Index j = 0; j < v.cols(); ++j) {
            const double lo = v.col(j).minCoeff();
            const double hi = v.col(j).maxCoeff();
            if (hi - lo < 1e-300)
                v.col(j).setZero();
            else
                v.col(j) = (v.col(j).array() - lo) / (hi - lo);
        }
    }
}

}  // namespace mhscg
