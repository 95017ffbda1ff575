from tastePath.dict_learn.metrics import dict_metrics, sweep
from tastePath.dict_learn.objective import grad_smooth, loss
from tastePath.dict_learn.optimizer import fit
from tastePath.dict_learn.selection import select_topn

__all__ = ["dict_metrics", "fit", "grad_smooth", "loss", "select_topn", "sweep"]
