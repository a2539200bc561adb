#pragma once

#include <string>
#include <vector>

#include "popuc/paraorthogonal.hpp"

namespace popuc::cli {

const std::vector<std::string>& figure_ids();

/// Zero figures: header series,param,index,arg,re,im,role.
/// Profile figures (fig4-*): header series,theta,value.
std::string figure_csv(const std::string& id, const ZeroOptions& options);

}  // namespace popuc::cli
