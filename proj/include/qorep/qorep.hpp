#pragma once

#include "qorep/atom_system.hpp"
#include "qorep/calculus.hpp"
#include "qorep/construction.hpp"
#include "qorep/error.hpp"
#include "qorep/matching.hpp"
#include "qorep/order_core.hpp"
#include "qorep/relation.hpp"
#include "qorep/space.hpp"
#include "qorep/verifier.hpp"
