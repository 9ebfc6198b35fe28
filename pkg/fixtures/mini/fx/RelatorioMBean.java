package fx;

public class RelatorioMBean {

    private GodService servico;

    public String gerar() {
        return servico.resumo();
    }
}
