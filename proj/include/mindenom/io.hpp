#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mindenom/experiments.hpp"

namespace mindenom {

inline constexpr int csv_schema_version = 1;

/// A named set of samples; the name becomes the leading `series` column of every file.
struct Series {
    std::string name;
    std::vector<Sample> samples;
};

/// Malformed or mismatched input file.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Columns: series,index,input,statistic.
void write_samples_csv(const std::string& path, const std::vector<Series>& series);
/// Columns: series,T,xi_hat, evaluated on the grid.
void write_cdf_csv(const std::string& path, const std::vector<Series>& series,
                   const std::vector<double>& grid = default_grid());

struct CdfCurve {
    std::string source;
    std::string series;
    std::vector<double> t;
    std::vector<double> xi;
};

/// Reads a cdf.csv file; throws SchemaError on an empty or malformed file.
std::vector<CdfCurve> read_cdf_csv(const std::string& path);

/// Overlays the curves as polylines on a logarithmic T axis.
std::string render_svg(const std::vector<CdfCurve>& curves);
/// Columns: source,series,T,xi_hat.
void write_merged_csv(const std::string& path, const std::vector<CdfCurve>& curves);

void write_text_file(const std::string& path, const std::string& content);

} // namespace mindenom
