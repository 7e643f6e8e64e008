#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "distvar/distortion.h"
#include "distvar/groebner.h"
#include "distvar/multi_param.h"

namespace distvar {

// Two-view models as subvarieties of P^8 with coordinates x11..x33.
enum class ModelId { kF, kE, kG, kGprime, kGdoubleprime };

struct ModelInfo {
  ModelId id;
  std::string_view name;
  std::string_view description;
  int dimension;
  int degree;
};

const ModelInfo& model_info(ModelId id);
std::vector<ModelId> all_models();
// Accepts F, E, G, Gprime (or G'), Gdoubleprime (or G'').
ModelId parse_model_id(std::string_view text);

// x11, x12, ..., x33.
const std::vector<std::string>& matrix_variable_names();

template <ExactDomain D>
Ideal<D> model_ideal(ModelId id, const D& domain = D{});

// The quintic of G in the text format, over matrix_variable_names().
std::string_view g_quintic_text();

enum class ConfigKind { kUBoth, kVRight, kTwoParam, kFourParam };
ConfigKind parse_config_kind(std::string_view text);
std::string_view config_kind_name(ConfigKind kind);

using ModelConfig = std::variant<DistortionVector, MultiParamConfig>;
// The configurations are shared by all five models.
ModelConfig model_config(ModelId id, ConfigKind which);

extern template Ideal<PrimeField> model_ideal(ModelId, const PrimeField&);
extern template Ideal<RationalField> model_ideal(ModelId, const RationalField&);

}  // namespace distvar
