from .pipeline import PlanResult, RearrangementPipeline, run_trial

__all__ = ["PlanResult", "RearrangementPipeline", "run_trial"]
