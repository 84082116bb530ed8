#pragma once

#include "seedlang/automaton.hpp"
#include "seedlang/design.hpp"
#include "seedlang/laser.hpp"
#include "seedlang/seed.hpp"
#include "seedlang/subshift.hpp"
