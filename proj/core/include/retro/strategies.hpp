#pragma once

#include <memory>

#include "retro/auto_full.hpp"
#include "retro/checkpoint_full.hpp"
#include "retro/replay_oracle.hpp"
#include "retro/wbt_full.hpp"

namespace retro {

template <BaseStructure Base>
std::unique_ptr<FullRetro<Base>> make_full_retro(const StrategyConfig& config, Base empty = Base{}) {
  switch (config.strategy) {
    case Strategy::Checkpoint: return std::make_unique<CheckpointFull<Base>>(std::move(empty), config.fixed_block);
    case Strategy::Wbt: return std::make_unique<WbtFull<Base>>(std::move(empty), config.alpha);
    case Strategy::Oracle: return std::make_unique<ReplayOracle<Base>>(std::move(empty));
    case Strategy::Auto: return std::make_unique<AutoFull<Base>>(std::move(empty), config.alpha, config.fixed_block);
  }
  return nullptr;
}

}  // namespace retro
