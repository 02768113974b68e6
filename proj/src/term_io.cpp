#include "eisct/term_io.hpp"

#include <sstream>

#include "json.hpp"

namespace eisct {

using json = nlohmann::ordered_json;

std::string term_table_json(const CTermTable& table, const ThetaConstants* theta) {
    json out;
    out["truncation"] = table.truncation;
    json terms = json::array();
    for (const auto& e : table.entries) {
        json t;
        t["word"] = e.word;
        t["length"] = e.length;
        if (e.exact) {
            t["c"] = {{"num", e.c.num().to_string()}, {"den", e.c.den().to_string()}};
            t["char_exponent"] = e.char_part.exponent().get_str();
            t["char_ratfunc"] = {{"num", e.char_part.ratfunc().num().to_string()},
                                 {"den", e.char_part.ratfunc().den().to_string()}};
            if (e.numeric_is_exact) t["numeric_exact"] = e.numeric_exact.get_str();
        }
        t["numeric"] = e.numeric;
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    json sums = json::array();
    for (std::size_t k = 0; k < table.partial_sums.size(); ++k) {
        json s;
        s["L"] = k;
        s["partial_sum"] = table.partial_sums[k];
        if (table.exact_sums) s["partial_sum_exact"] = table.partial_sums_exact[k].get_str();
        if (theta) s["tail_bound"] = theta->tail_bound(static_cast<int>(k));
        sums.push_back(std::move(s));
    }
    out["partial_sums"] = std::move(sums);
    if (theta) {
        out["theta"] = {{"eps", theta->eps.get_str()},
                        {"M", theta->M},
                        {"sigma1", theta->sigma1},
                        {"sigma2", theta->sigma2},
                        {"sigma2_coefficient", theta->sigma2_coefficient.get_str()},
                        {"sigma3", theta->sigma3},
                        {"M_eps", theta->M_eps},
                        {"Mbar_eps", theta->Mbar_eps}};
    }
    return out.dump(2) + "\n";
}

std::string term_table_csv(const CTermTable& table, const ThetaConstants* theta) {
    std::ostringstream os;
    os << "L,partial_sum,tail_bound\n";
    os.precision(17);
    for (std::size_t k = 0; k < table.partial_sums.size(); ++k) {
        os << k << "," << table.partial_sums[k] << ",";
        if (theta) os << theta->tail_bound(static_cast<int>(k));
        os << "\n";
    }
    return os.str();
}

}  // namespace eisct
