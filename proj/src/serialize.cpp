#include "truncbose/serialize.hpp"

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace truncbose::cli {

std::string format_double(double value) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                         std::chars_format::general, 17);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string matrix_to_csv(const Matrix& matrix) {
    std::string out;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            if (j > 0)
                out += ',';
            out += format_double(matrix(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace {

double parse_field(std::string_view field) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("csv: unparsable field '" + std::string(field) + "'");
    return value;
}

std::vector<std::vector<double>> parse_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos)
            eol = text.size();
        std::string_view line(text.data() + pos, eol - pos);
        if (!line.empty()) {
            std::vector<double> row;
            std::size_t start = 0;
            while (true) {
                std::size_t comma = line.find(',', start);
                if (comma == std::string_view::npos) {
                    row.push_back(parse_field(line.substr(start)));
                    break;
                }
                row.push_back(parse_field(line.substr(start, comma - start)));
                start = comma + 1;
            }
            rows.push_back(std::move(row));
        }
        pos = eol + 1;
    }
    return rows;
}

} // namespace

Matrix matrix_from_csv(const std::string& text) {
    const std::vector<std::vector<double>> rows = parse_rows(text);
    if (rows.empty())
        throw std::invalid_argument("csv: no rows");
    const std::size_t cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("csv: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::string spectrum_to_csv(const spectral::SpectrumResult& spectrum) {
    std::string out;
    for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
        out += format_double(spectrum.eigenvalues[k]);
        if (k < spectrum.eigenvectors.size())
            for (double component : spectrum.eigenvectors[k]) {
                out += ',';
                out += format_double(component);
            }
        out += '\n';
    }
    return out;
}

std::string scaling_to_csv(const scaling::ScalingFit& fit) {
    std::string out;
    for (const auto& [n, value] : fit.samples) {
        out += "sample,";
        out += format_double(n);
        out += ',';
        out += format_double(value);
        out += '\n';
    }
    out += "fit,";
    out += format_double(fit.exponent);
    out += ',';
    out += format_double(fit.prefactor);
    out += ',';
    out += format_double(fit.rms_residual);
    out += '\n';
    return out;
}

} // namespace truncbose::cli
