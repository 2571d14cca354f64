#ifndef HMSTURM_JSON_IO_HPP
#define HMSTURM_JSON_IO_HPP

#include <json.hpp>

#include "hmsturm/sturmcheck.hpp"

namespace hmsturm {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Rat &r);
ordered_json to_json(const QuadElem &v);
ordered_json to_json(const FracIdeal &I);
ordered_json to_json(const CuspResolution &res);
ordered_json to_json(const CuspSet &set);
ordered_json to_json(const BoundReport &rep);
ordered_json to_json(const RationalCaseBound &b);
ordered_json to_json(const IntersectionReport &rep);
ordered_json to_json(const SurfaceClass &c);
ordered_json to_json(const SturmSet &set);
ordered_json to_json(const CongruenceVerdict &v);

// rows "x_num,x_den,y_num,y_den,witness_j,trace" per the file contract
std::string sturm_set_csv(const SturmSet &set);

// cycle polygon diagram, nodes labeled by the self-intersections -b_k
std::string cycle_svg(const CuspResolution &res);

}  // namespace hmsturm

#endif
