"""Run (or resume) the GridCleanup learning-curve comparison used by acceptance criterion 7."""
import json
import logging
import sys
from pathlib import Path

from agentcentric.experiments import TrendPlan, run_trends

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", stream=sys.stdout)
root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "trends"


def progress(seed, step, rec):
    if step % 50 == 0:
        logging.info("seed %d step %d frames %d return %s", seed, step, rec["frames"], rec["mean_episode_return"])


report = run_trends(TrendPlan(root), on_step=progress)
(root / "report.json").write_text(json.dumps(report, indent=1))
print(json.dumps(report["trends"], indent=1))
