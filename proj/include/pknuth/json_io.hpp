#pragma once

#include <string>

#include "json.hpp"
#include "pknuth/insertion.hpp"
#include "pknuth/knuth.hpp"
#include "pknuth/order.hpp"
#include "pknuth/symfunc.hpp"
#include "pknuth/tableaux.hpp"

namespace pknuth {

inline constexpr int kSchemaVersion = 1;

nlohmann::json order_to_json(const UnitIntervalOrder& o);
UnitIntervalOrder order_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

nlohmann::json word_to_json(const Word& w);
nlohmann::json graph_to_json(const KnuthGraph& g);
nlohmann::json qsym_to_json(const QSym& q);
nlohmann::json schur_to_json(const SchurExpansion& e);
nlohmann::json prs_to_json(const PrsResult& r);

}  // namespace pknuth
