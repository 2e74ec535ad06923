#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lvf {

/// One scored cell: a (feeder, method, metric, slice) value. Slices are
/// "all", "day1".."day4" and "hour1".."hour96".
struct ReportRow {
    std::string feeder;
    std::string method;
    std::string metric;  // MAPE, RMAE, RCRPS, PINBALL, EXCLUDED
    std::string slice;
    double value = 0.0;

    friend bool operator<(const ReportRow& a, const ReportRow& b) {
        if (a.feeder != b.feeder) return a.feeder < b.feeder;
        if (a.method != b.method) return a.method < b.method;
        if (a.metric != b.metric) return a.metric < b.metric;
        if (a.slice != b.slice) return a.slice < b.slice;
        return a.value < b.value;
    }
    friend bool operator==(const ReportRow& a, const ReportRow& b) {
        return a.feeder == b.feeder && a.method == b.method && a.metric == b.metric &&
               a.slice == b.slice && a.value == b.value;
    }
};

/// Per feeder x method x metric x slice scores with uniqueness enforced
/// on insert. Rows are kept sorted for deterministic output.
class ErrorReport {
public:
    void add(ReportRow row);

    const std::vector<ReportRow>& rows() const { return rows_; }

    std::optional<double> find(const std::string& feeder, const std::string& method,
                               const std::string& metric, const std::string& slice) const;

    /// Mean of a metric over all feeders for one method and slice.
    std::optional<double> mean_over_feeders(const std::string& method, const std::string& metric,
                                            const std::string& slice) const;

    std::vector<std::string> feeders() const;

    void merge(const ErrorReport& other);

private:
    std::vector<ReportRow> rows_;
    std::map<std::string, std::size_t> index_;

    static std::string key(const std::string& feeder, const std::string& method,
                           const std::string& metric, const std::string& slice);
};

}  // namespace lvf
