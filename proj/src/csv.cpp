#include "zdown/io.hpp"

namespace zdown {

std::string write_metrics_csv(const MetricSeries& series)
{
    std::string out = "z,s_d,v,r,R\n";
    for (const MetricRow& row : series.rows) {
        out += format_number(row.z) + "," + format_number(row.s_d) + "," + format_number(row.v) + "," +
               format_number(row.r) + "," + format_number(row.R) + "\n";
    }
    return out;
}

std::string write_discrepancy_csv(const MetricSeries& series)
{
    std::string out = "node_id,D\n";
    for (const auto& [id, d] : series.discrepancy) {
        // Ids are written verbatim unless they would break the row.
        if (id.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : id) {
                quoted += c;
                if (c == '"') {
                    quoted += '"';
                }
            }
            out += quoted + "\"";
        } else {
            out += id;
        }
        out += "," + format_number(d) + "\n";
    }
    return out;
}

}  // namespace zdown
