#include "parcut/pqueue.hpp"

namespace parcut {

std::string_view to_string(QueueKind kind) {
  switch (kind) {
    case QueueKind::kHeap:
      return "heap";
    case QueueKind::kBStack:
      return "bstack";
    case QueueKind::kBQueue:
      return "bqueue";
  }
  return "unknown";
}

QueueKind parse_queue_kind(std::string_view name) {
  if (name == "heap") return QueueKind::kHeap;
  if (name == "bstack") return QueueKind::kBStack;
  if (name == "bqueue") return QueueKind::kBQueue;
  throw InputError("unknown queue kind '" + std::string(name) + "' (expected heap, bstack or bqueue)");
}

}  // namespace parcut
